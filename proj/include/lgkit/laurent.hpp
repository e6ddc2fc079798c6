#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace lgkit {

// Exponent pair (tau, q). Ordered lexicographically, tau first.
struct Monomial {
  int t = 0;
  int q = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  Monomial operator+(const Monomial& o) const { return {t + o.t, q + o.q}; }
  Monomial operator-(const Monomial& o) const { return {t - o.t, q - o.q}; }
};

struct VariableNames {
  std::string t = "t";
  std::string q = "q";
};

// Two-variable Laurent polynomial in tau and q with integer coefficients.
// Terms are kept in descending (tau, q) order with no zero coefficients, so
// structural equality is value equality.
class Laurent2 {
 public:
  using TermMap = std::map<Monomial, mpz_class, std::greater<Monomial>>;

  Laurent2() = default;
  Laurent2(long c);  // NOLINT(google-explicit-constructor)
  explicit Laurent2(const mpz_class& c);

  static Laurent2 monomial(const mpz_class& c, int et, int eq);
  static Laurent2 tau(int e = 1) { return monomial(1, e, 0); }
  static Laurent2 q(int e = 1) { return monomial(1, 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_q_free() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  mpz_class coefficient(int et, int eq) const;

  // Leading term in (tau, q) lex order. Requires a nonzero polynomial.
  std::pair<Monomial, mpz_class> leading() const { return *terms_.begin(); }
  // Componentwise minimum of exponents. Requires a nonzero polynomial.
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  mpz_class content() const;

  Laurent2 operator-() const;
  Laurent2& operator+=(const Laurent2& o);
  Laurent2& operator-=(const Laurent2& o);
  Laurent2& operator*=(const Laurent2& o);
  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
  friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b);
  friend bool operator==(const Laurent2& a, const Laurent2& b) = default;
  // Total order used to sort factor lists; unrelated to magnitude.
  friend std::strong_ordering operator<=>(const Laurent2& a, const Laurent2& b);

  Laurent2 scaled(const mpz_class& c) const;
  Laurent2 shifted(const Monomial& m) const;
  // Exact division of every coefficient by c. Caller guarantees divisibility.
  Laurent2 divided_exact(const mpz_class& c) const;
  // Integer power; negative powers are allowed for monomials with unit coefficient.
  Laurent2 pow(int k) const;

  // q -> q^-1.
  Laurent2 involution_q() const;
  // q^e -> q^(e * factor).
  Laurent2 scale_q_exponents(int factor) const;

  mpq_class evaluate(const mpq_class& t, const mpq_class& q) const;

  std::string to_string(const VariableNames& names = {}) const;

 private:
  void add_term(const Monomial& m, const mpz_class& c);
  friend class Laurent2Builder;
  TermMap terms_;
};

// Accumulates terms without intermediate cancellation bookkeeping.
class Laurent2Builder {
 public:
  void add(const Monomial& m, const mpz_class& c);
  Laurent2 build();

 private:
  Laurent2::TermMap terms_;
};

// Exact quotient a / b in the Laurent ring, or nothing if b does not divide a.
std::optional<Laurent2> divide_exact(const Laurent2& a, const Laurent2& b);

// Greatest common divisor up to units (sign and monomial): the result has
// content gcd(content(a), content(b)), minimal exponents zero and a positive
// leading coefficient. Bivariate primitive PRS; meant for modest inputs.
Laurent2 gcd(const Laurent2& a, const Laurent2& b);

}  // namespace lgkit
