#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "lgkit/laurent.hpp"

namespace lgkit {

// p = sign * tau^shift.t * q^shift.q * content * prod(factors).
// Factors are primitive, have minimal exponents zero and a positive leading
// coefficient; unit-coefficient binomials are split into homogenised
// cyclotomic pieces.
struct Factorization {
  int sign = 1;
  Monomial shift;
  mpz_class content = 1;
  std::vector<Laurent2> factors;
};

Factorization factor_simple(const Laurent2& p);

// Primitive part with minimal exponents zero and positive leading coefficient.
Laurent2 canonical_associate(const Laurent2& p);

// Quotient of Laurent polynomials with the denominator kept as
// content * prod f_k^e_k over canonical factors. After every operation the
// numerator is trial-divided by each denominator factor and the integer
// content is cancelled, so:
//   - den() has minimal exponents zero and positive leading coefficient,
//   - gcd(content(num), content(den)) = 1.
// The form is not a unique normal form; operator== compares values.
class RationalFn {
 public:
  using FactorList = std::vector<std::pair<Laurent2, int>>;

  RationalFn() = default;
  RationalFn(long c);            // NOLINT(google-explicit-constructor)
  RationalFn(Laurent2 p);        // NOLINT(google-explicit-constructor)

  // sign * prod(num) / prod(den), cancelling common factors syntactically.
  static RationalFn from_factors(int sign, const std::vector<Laurent2>& num,
                                 const std::vector<Laurent2>& den);

  const Laurent2& num() const { return num_; }
  const Laurent2& den() const { return den_; }
  const mpz_class& den_content() const { return den_content_; }
  const FactorList& den_factors() const { return den_factors_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_factors_.empty() && den_content_ == 1; }

  RationalFn inverse() const;
  RationalFn pow(int k) const;
  RationalFn involution_q() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

  // Value equality (cross-multiplication over a common denominator).
  friend bool operator==(const RationalFn& a, const RationalFn& b);
  bool same_form(const RationalFn& o) const;

  mpq_class evaluate(const mpq_class& t, const mpq_class& q) const;
  std::string to_string(const VariableNames& names = {}) const;

 private:
  RationalFn(Laurent2 num, mpz_class content, FactorList factors);
  void reduce();
  Laurent2 expand_den() const;

  Laurent2 num_;
  mpz_class den_content_ = 1;
  FactorList den_factors_;
  Laurent2 den_ = Laurent2(1);
};

// num / den with every common polynomial factor removed (full gcd).
// Throws std::domain_error on a zero denominator.
RationalFn rat_normalize(const Laurent2& num, const Laurent2& den);

}  // namespace lgkit
