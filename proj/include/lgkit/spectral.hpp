#pragma once

#include <string>
#include <vector>

#include "lgkit/cyclotomic.hpp"
#include "lgkit/laurent.hpp"
#include "lgkit/rational.hpp"

namespace lgkit {

// Eigenvalue of the braiding on the i-th summand of V (x) V:
// (-1)^i tau^(m-2i) q^(i(i-1)).
Laurent2 xi(int m, int i);
Laurent2 xi_inverse(int m, int i);

struct EigenvalueSet {
  int m = 0;
  std::vector<Laurent2> xi;
  std::vector<Laurent2> gamma;  // gamma_i = xi_i^2

  static EigenvalueSet of(int m);
};

// Quantum trace weight of the projector P_i, as a closed product. Values are
// cached; safe to call concurrently.
const RationalFn& cl_P(int m, int i);

struct QTraceVector {
  int m = 0;
  std::vector<RationalFn> clp;

  static QTraceVector of(int m);
};

// sum_i a_i P_i in the (2,2)-tangle algebra spanned by the projectors.
class SpectralTangle {
 public:
  SpectralTangle(int m, std::vector<RationalFn> coefficients);

  static SpectralTangle identity(int m);
  static SpectralTangle braiding(int m);
  static SpectralTangle braiding_inverse(int m);
  // Braiding to the power k (k may be negative).
  static SpectralTangle braiding_power(int m, int k);

  int m() const { return m_; }
  const std::vector<RationalFn>& coefficients() const { return a_; }

  friend bool operator==(const SpectralTangle& a, const SpectralTangle& b);

 private:
  int m_;
  std::vector<RationalFn> a_;
};

SpectralTangle spectral_compose(const SpectralTangle& a, const SpectralTangle& b);
RationalFn spectral_cl(const SpectralTangle& t);

// Invariant of the closure of sigma^k: sum_i xi_i^k cl(P_i).
RationalFn lg_closed_2braid(int m, int k);
// Same sum with a caller-supplied eigenvalue table (used for negative controls).
RationalFn lg_closed_2braid(int m, int k, const std::vector<RationalFn>& eigenvalues);

CycloFraction eval_spectral_at_root(int m, int r, const RationalFn& x);

struct SkeinCoefficient {
  int i = 0;
  CycloFraction raw;      // conj(xi_i) - conj(xi_i)^-1 - (tau^m - tau^-m)
  CycloFraction product;  // raw * conj(cl(P_i))
};

std::vector<SkeinCoefficient> skein_coefficient_report(int m, int r);

// The braiding satisfies prod_j (R - c_j) = 0 for the candidate list c, tested
// on every projector: prod_j (xi_i - c_j) = 0 for each i.
bool characteristic_check(int m);
bool characteristic_check(int m, const std::vector<Laurent2>& candidates);

// Highest weight (0_{m-i-j}, -1_i, -2_j | c*alpha + i + 2j) of V(i, j, c*alpha),
// or of the even-subalgebra module V0(i, j, c*alpha) when even is set.
struct WeightLabel {
  int m = 0;
  int i = 0;
  int j = 0;
  int alpha_multiple = 1;
  bool even = false;

  std::vector<int> entries() const;
  std::string shift() const;
  std::string weight_string() const;
  std::string module_string() const;
  friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
};

WeightLabel weight_label(int m, int i, int j, int alpha_multiple = 1, bool even = false);

struct WeightDecompositions {
  std::vector<WeightLabel> fundamental;         // V(0,0,alpha) over the even part
  std::vector<WeightLabel> tensor_square;       // V(0,0,alpha)^(x)2
  std::vector<std::vector<WeightLabel>> kac;    // V(i,0,2alpha) over the even part
};

WeightDecompositions weight_decompositions(int m);

// LG^{m,1}(tau, q) -> LG^{1,m}(tau, q^-1).
RationalFn symmetry_dual(const RationalFn& x);

}  // namespace lgkit
