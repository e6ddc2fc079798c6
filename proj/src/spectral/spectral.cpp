#include "lgkit/spectral.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace lgkit {

namespace {

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1, got " + std::to_string(m));
}

void check_index(int m, int i) {
  check_m(m);
  if (i < 0 || i > m) {
    throw std::out_of_range("projector index " + std::to_string(i) + " outside 0.." +
                            std::to_string(m));
  }
}

// x - x^-1 for the monomial x = tau^et q^eq.
Laurent2 minus_inverse(int et, int eq) { return Laurent2::monomial(1, et, eq) - Laurent2::monomial(1, -et, -eq); }

RationalFn compute_cl(int m, int i) {
  std::vector<Laurent2> num;
  std::vector<Laurent2> den;
  for (int j = 1; j <= i; ++j) {
    num.push_back(minus_inverse(0, m - j + 1));
    den.push_back(minus_inverse(0, i - j + 1));
    num.push_back(minus_inverse(1, -(j - 1)));
    den.push_back(minus_inverse(2, -(i + j - 2)));
  }
  for (int j = i + 1; j <= m; ++j) {
    num.push_back(minus_inverse(1, -(j - 1)));
    den.push_back(minus_inverse(2, -(i + j - 1)));
  }
  return RationalFn::from_factors(i % 2 == 0 ? 1 : -1, num, den);
}

}  // namespace

Laurent2 xi(int m, int i) {
  check_index(m, i);
  return Laurent2::monomial(i % 2 == 0 ? 1 : -1, m - 2 * i, i * (i - 1));
}

Laurent2 xi_inverse(int m, int i) { return xi(m, i).pow(-1); }

EigenvalueSet EigenvalueSet::of(int m) {
  check_m(m);
  EigenvalueSet s;
  s.m = m;
  for (int i = 0; i <= m; ++i) {
    s.xi.push_back(lgkit::xi(m, i));
    s.gamma.push_back(s.xi.back() * s.xi.back());
  }
  return s;
}

const RationalFn& cl_P(int m, int i) {
  check_index(m, i);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, RationalFn> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({m, i}); it != cache.end()) return it->second;
  }
  RationalFn value = compute_cl(m, i);
  std::lock_guard lock(mutex);
  return cache.try_emplace({m, i}, std::move(value)).first->second;
}

QTraceVector QTraceVector::of(int m) {
  check_m(m);
  QTraceVector v;
  v.m = m;
  for (int i = 0; i <= m; ++i) v.clp.push_back(cl_P(m, i));
  return v;
}

SpectralTangle::SpectralTangle(int m, std::vector<RationalFn> coefficients)
    : m_(m), a_(std::move(coefficients)) {
  check_m(m);
  if (a_.size() != static_cast<std::size_t>(m + 1)) {
    throw std::invalid_argument("a spectral tangle for m = " + std::to_string(m) + " needs " +
                                std::to_string(m + 1) + " coefficients");
  }
}

SpectralTangle SpectralTangle::identity(int m) {
  check_m(m);
  return SpectralTangle(m, std::vector<RationalFn>(static_cast<std::size_t>(m + 1), RationalFn(1)));
}

SpectralTangle SpectralTangle::braiding(int m) { return braiding_power(m, 1); }

SpectralTangle SpectralTangle::braiding_inverse(int m) { return braiding_power(m, -1); }

SpectralTangle SpectralTangle::braiding_power(int m, int k) {
  check_m(m);
  std::vector<RationalFn> a;
  for (int i = 0; i <= m; ++i) a.emplace_back(xi(m, i).pow(k));
  return SpectralTangle(m, std::move(a));
}

bool operator==(const SpectralTangle& a, const SpectralTangle& b) {
  return a.m_ == b.m_ && a.a_ == b.a_;
}

SpectralTangle spectral_compose(const SpectralTangle& a, const SpectralTangle& b) {
  if (a.m() != b.m()) throw std::invalid_argument("spectral tangles for different m");
  std::vector<RationalFn> c;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    c.push_back(a.coefficients()[i] * b.coefficients()[i]);
  }
  return SpectralTangle(a.m(), std::move(c));
}

RationalFn spectral_cl(const SpectralTangle& t) {
  RationalFn sum;
  for (int i = 0; i <= t.m(); ++i) sum += t.coefficients()[static_cast<std::size_t>(i)] * cl_P(t.m(), i);
  return sum;
}

RationalFn lg_closed_2braid(int m, int k) { return spectral_cl(SpectralTangle::braiding_power(m, k)); }

RationalFn lg_closed_2braid(int m, int k, const std::vector<RationalFn>& eigenvalues) {
  check_m(m);
  if (eigenvalues.size() != static_cast<std::size_t>(m + 1)) {
    throw std::invalid_argument("eigenvalue table has the wrong length");
  }
  RationalFn sum;
  for (int i = 0; i <= m; ++i) sum += eigenvalues[static_cast<std::size_t>(i)].pow(k) * cl_P(m, i);
  return sum;
}

CycloFraction eval_spectral_at_root(int m, int r, const RationalFn& x) { return reduce_at_root(x, m, r); }

std::vector<SkeinCoefficient> skein_coefficient_report(int m, int r) {
  check_m(m);
  const Laurent2 shift = Laurent2::tau(m) - Laurent2::tau(-m);
  std::vector<SkeinCoefficient> out;
  for (int i = 0; i <= m; ++i) {
    CycloFraction raw = reduce_at_root(xi(m, i) - xi_inverse(m, i) - shift, m, r);
    CycloFraction product = raw * reduce_at_root(cl_P(m, i), m, r);
    out.push_back(SkeinCoefficient{i, std::move(raw), std::move(product)});
  }
  return out;
}

bool characteristic_check(int m) { return characteristic_check(m, EigenvalueSet::of(m).xi); }

bool characteristic_check(int m, const std::vector<Laurent2>& candidates) {
  check_m(m);
  for (int i = 0; i <= m; ++i) {
    Laurent2 p(1);
    const Laurent2 x = xi(m, i);
    for (const auto& c : candidates) p = p * (x - c);
    if (!p.is_zero()) return false;
  }
  return true;
}

std::vector<int> WeightLabel::entries() const {
  std::vector<int> e(static_cast<std::size_t>(m - i - j), 0);
  e.insert(e.end(), static_cast<std::size_t>(i), -1);
  e.insert(e.end(), static_cast<std::size_t>(j), -2);
  return e;
}

std::string WeightLabel::shift() const {
  std::string s = alpha_multiple == 1 ? "α" : std::to_string(alpha_multiple) + "α";
  const int c = i + 2 * j;
  if (c != 0) s += "+" + std::to_string(c);
  return s;
}

std::string WeightLabel::weight_string() const {
  std::string s = "(";
  bool first = true;
  for (int e : entries()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + (first ? "| " : " | ") + shift() + ")";
}

std::string WeightLabel::module_string() const {
  const std::string a = alpha_multiple == 1 ? "α" : std::to_string(alpha_multiple) + "α";
  return std::string(even ? "V0(" : "V(") + std::to_string(i) + "," + std::to_string(j) + "," + a + ")";
}

WeightLabel weight_label(int m, int i, int j, int alpha_multiple, bool even) {
  check_m(m);
  if (i < 0 || j < 0 || i + j > m) {
    throw std::invalid_argument("weight label needs i, j >= 0 and i + j <= m");
  }
  return WeightLabel{m, i, j, alpha_multiple, even};
}

WeightDecompositions weight_decompositions(int m) {
  check_m(m);
  WeightDecompositions w;
  for (int i = 0; i <= m; ++i) {
    w.fundamental.push_back(weight_label(m, i, 0, 1, true));
    w.tensor_square.push_back(weight_label(m, i, 0, 2, false));
    std::vector<WeightLabel> kac;
    for (int j = 0; j <= i; ++j) {
      for (int k = i; k <= m; ++k) kac.push_back(weight_label(m, k - j, j, 2, true));
    }
    w.kac.push_back(std::move(kac));
  }
  return w;
}

RationalFn symmetry_dual(const RationalFn& x) { return x.involution_q(); }

}  // namespace lgkit
