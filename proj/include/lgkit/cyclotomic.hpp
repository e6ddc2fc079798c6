#pragma once

#include <string>

#include "lgkit/int_poly.hpp"
#include "lgkit/laurent.hpp"
#include "lgkit/rational.hpp"

namespace lgkit {

// d-th cyclotomic polynomial in q. Results are cached; safe to call
// concurrently.
const IntPoly& cyclotomic_poly(int d);

int euler_phi(int d);

// Order of e^{pi i r / m}: 2m / gcd(r, 2m).
int root_order(int m, int r);

// Exponent e with e^{pi i r / m} = e^{2 pi i e / d} for d = root_order(m, r).
int root_power(int m, int r);

// Element of Frac(Z[tau^{+-1}][q] / Phi_d(q)), stored as num / den with both
// parts reduced so that every q-exponent lies in [0, phi(d)). Phi_d is
// irreducible, so the quotient ring is a domain and equality is decided by
// cross-multiplication.
class CycloFraction {
 public:
  CycloFraction(int d, Laurent2 num, Laurent2 den);

  // Image of a Laurent polynomial under q -> zeta_d^power.
  static CycloFraction embed(int d, const Laurent2& x, int power = 1);

  int modulus() const { return d_; }
  const Laurent2& num() const { return num_; }
  const Laurent2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  CycloFraction operator-() const;
  friend CycloFraction operator+(const CycloFraction& a, const CycloFraction& b);
  friend CycloFraction operator-(const CycloFraction& a, const CycloFraction& b);
  friend CycloFraction operator*(const CycloFraction& a, const CycloFraction& b);
  friend CycloFraction operator/(const CycloFraction& a, const CycloFraction& b);
  friend bool operator==(const CycloFraction& a, const CycloFraction& b);

  // Unique representative num / den with den a q-free primitive polynomial
  // (positive leading coefficient, minimal exponent zero) coprime to num.
  struct NormalForm {
    Laurent2 num;
    Laurent2 den;
  };
  NormalForm normal_form() const;
  std::string to_string(const VariableNames& names = {}) const;

 private:
  int d_;
  Laurent2 num_;
  Laurent2 den_;
};

// Reduces x modulo Phi_d(q) after substituting q -> q^power (mod d).
Laurent2 reduce_mod_cyclotomic(const Laurent2& x, int d, int power = 1);

// Evaluation at q = e^{pi i r / m}. Requires m >= 1 and gcd(r, m) = 1.
CycloFraction reduce_at_root(const Laurent2& x, int m, int r);
// Throws PoleAtRoot when the denominator vanishes at the root after every
// common factor Phi_d(q) has been cancelled.
CycloFraction reduce_at_root(const RationalFn& x, int m, int r);

// Evaluation at q = e^{2 pi i power / d}; power must be coprime to d.
CycloFraction reduce_at_root_of_unity(const RationalFn& x, int d, int power);

}  // namespace lgkit
