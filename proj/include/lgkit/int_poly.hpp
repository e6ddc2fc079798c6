#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace lgkit {

// Dense univariate polynomial over the integers, coefficients stored
// lowest degree first. The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }
  mpz_class operator[](int i) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  // Nonnegative gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  // Divides out the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;
  IntPoly shifted(int k) const;  // multiply by x^k, k >= 0

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Exact quotient a / b over the integers, or nothing if b does not divide a.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

// Pseudo-remainder: lc(b)^e * a mod b with e just large enough to stay in Z[x].
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Greatest common divisor with positive leading coefficient (primitive PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace lgkit
