#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "lgkit/laurent.hpp"

namespace lgkit {

// Integer Laurent polynomial in s, where s^2 = t. Alexander polynomials live
// here: links with an even number of components have odd powers of s.
class HalfLaurent {
 public:
  using TermMap = std::map<int, mpz_class, std::greater<int>>;

  HalfLaurent() = default;
  HalfLaurent(long c);  // NOLINT(google-explicit-constructor)
  static HalfLaurent monomial(const mpz_class& c, int e);
  static HalfLaurent s(int e = 1) { return monomial(1, e); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  mpz_class coefficient(int e) const;
  bool has_only_even_powers() const;

  HalfLaurent operator-() const;
  friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  HalfLaurent& operator+=(const HalfLaurent& o) { return *this = *this + o; }
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) = default;

  // s -> s^-1.
  HalfLaurent inverted() const;
  // s -> tau^m, as a q-free Laurent2.
  Laurent2 substitute_power(int m) const;
  mpq_class evaluate(const mpq_class& s) const;

  // Rendered in s, or in t = s^2 (requires even powers only).
  std::string to_string(const std::string& var = "s") const;

 private:
  void add_term(int e, const mpz_class& c);
  TermMap terms_;
};

}  // namespace lgkit
