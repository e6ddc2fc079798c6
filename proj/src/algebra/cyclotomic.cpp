#include "lgkit/cyclotomic.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lgkit/errors.hpp"

namespace lgkit {

const IntPoly& cyclotomic_poly(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(1, d) - IntPoly::constant(1);
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto quotient = divide_exact(p, cyclotomic_poly(e));
    if (!quotient) throw std::logic_error("cyclotomic recursion failed");
    p = std::move(*quotient);
  }
  std::lock_guard lock(mutex);
  // std::map never invalidates references, so returning into it is safe.
  return cache.try_emplace(d, std::move(p)).first->second;
}

int euler_phi(int d) {
  int result = d;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

namespace {

int positive_mod(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_root(int m, int r) {
  if (m < 1) throw std::invalid_argument("root parameter m must be positive");
  if (std::gcd(r, m) != 1) {
    throw std::invalid_argument("r = " + std::to_string(r) + " is not coprime to m = " +
                                std::to_string(m));
  }
}

Laurent2 cyclotomic_laurent(int d) {
  Laurent2Builder b;
  const auto& c = cyclotomic_poly(d).coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) b.add(Monomial{0, static_cast<int>(k)}, c[k]);
  return b.build();
}

// Largest v <= limit with Phi^v | p; p is replaced by p / Phi^v.
int strip_cyclotomic(Laurent2& p, const Laurent2& phi, int limit) {
  int v = 0;
  while (v < limit) {
    auto quotient = divide_exact(p, phi);
    if (!quotient) break;
    p = std::move(*quotient);
    ++v;
  }
  return v;
}

}  // namespace

int root_order(int m, int r) {
  const int n = 2 * m;
  const int rr = positive_mod(r, n);
  return n / std::gcd(rr, n);
}

int root_power(int m, int r) {
  const int n = 2 * m;
  const int rr = positive_mod(r, n);
  return rr / std::gcd(rr, n);
}

Laurent2 reduce_mod_cyclotomic(const Laurent2& x, int d, int power) {
  const IntPoly& phi = cyclotomic_poly(d);
  const int deg = phi.degree();
  std::map<int, std::vector<mpz_class>> by_tau;
  for (const auto& [e, c] : x.terms()) {
    auto& row = by_tau[e.t];
    if (row.empty()) row.assign(static_cast<std::size_t>(d), 0);
    row[static_cast<std::size_t>(positive_mod(static_cast<long>(e.q) * power, d))] += c;
  }
  Laurent2Builder b;
  for (auto& [t, row] : by_tau) {
    for (int k = d - 1; k >= deg; --k) {
      const mpz_class c = row[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      for (int j = 0; j <= deg; ++j) row[static_cast<std::size_t>(k - deg + j)] -= c * phi[j];
    }
    for (int k = 0; k < deg; ++k) b.add(Monomial{t, k}, row[static_cast<std::size_t>(k)]);
  }
  return b.build();
}

CycloFraction::CycloFraction(int d, Laurent2 num, Laurent2 den)
    : d_(d), num_(reduce_mod_cyclotomic(num, d)), den_(reduce_mod_cyclotomic(den, d)) {
  if (den_.is_zero()) throw PoleAtRoot("denominator vanishes at the root of unity");
}

CycloFraction CycloFraction::embed(int d, const Laurent2& x, int power) {
  return CycloFraction(d, reduce_mod_cyclotomic(x, d, power), Laurent2(1));
}

CycloFraction CycloFraction::operator-() const { return CycloFraction(d_, -num_, den_); }

namespace {

void check_same_modulus(const CycloFraction& a, const CycloFraction& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("values at roots of unity of different orders are not comparable");
  }
}

}  // namespace

CycloFraction operator+(const CycloFraction& a, const CycloFraction& b) {
  check_same_modulus(a, b);
  if (a.den_ == b.den_) return CycloFraction(a.d_, a.num_ + b.num_, a.den_);
  return CycloFraction(a.d_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CycloFraction operator-(const CycloFraction& a, const CycloFraction& b) { return a + (-b); }

CycloFraction operator*(const CycloFraction& a, const CycloFraction& b) {
  check_same_modulus(a, b);
  return CycloFraction(a.d_, a.num_ * b.num_, a.den_ * b.den_);
}

CycloFraction operator/(const CycloFraction& a, const CycloFraction& b) {
  check_same_modulus(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero");
  return CycloFraction(a.d_, a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const CycloFraction& a, const CycloFraction& b) {
  check_same_modulus(a, b);
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return reduce_mod_cyclotomic(a.num_ * b.den_ - b.num_ * a.den_, a.d_).is_zero();
}

CycloFraction::NormalForm CycloFraction::normal_form() const {
  Laurent2 num = num_;
  Laurent2 den = den_;
  if (num.is_zero()) return {Laurent2(), Laurent2(1)};
  if (!den.is_q_free()) {
    // Multiply through by the Galois conjugates of the denominator so that
    // it becomes its own norm, which lies in Z[tau^{+-1}].
    Laurent2 conj_product(1);
    for (int j = 2; j < d_; ++j) {
      if (std::gcd(j, d_) != 1) continue;
      conj_product = reduce_mod_cyclotomic(conj_product * reduce_mod_cyclotomic(den, d_, j), d_);
    }
    num = reduce_mod_cyclotomic(num * conj_product, d_);
    den = reduce_mod_cyclotomic(den * conj_product, d_);
    if (!den.is_q_free()) throw std::logic_error("norm of a cyclotomic element is not q-free");
  }
  Laurent2 g = gcd(num, den);
  num = *divide_exact(num, g);
  den = *divide_exact(den, g);
  const Monomial shift = den.min_exponents();
  num = num.shifted(Monomial{} - shift);
  den = den.shifted(Monomial{} - shift);
  if (den.leading().second < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::string CycloFraction::to_string(const VariableNames& names) const {
  NormalForm nf = normal_form();
  if (nf.den.is_one()) return nf.num.to_string(names);
  return "(" + nf.num.to_string(names) + ")/(" + nf.den.to_string(names) + ")";
}

CycloFraction reduce_at_root(const Laurent2& x, int m, int r) {
  check_root(m, r);
  return CycloFraction::embed(root_order(m, r), x, root_power(m, r));
}

CycloFraction reduce_at_root(const RationalFn& x, int m, int r) {
  check_root(m, r);
  return reduce_at_root_of_unity(x, root_order(m, r), root_power(m, r));
}

CycloFraction reduce_at_root_of_unity(const RationalFn& x, int d, int power) {
  if (d < 1 || std::gcd(power, d) != 1) {
    throw std::invalid_argument("exponent must be coprime to the root order");
  }
  if (x.is_polynomial()) return CycloFraction::embed(d, x.num(), power);
  const Laurent2 phi = cyclotomic_laurent(d);
  Laurent2 den(x.den_content());
  int pole_order = 0;
  for (const auto& [f, e] : x.den_factors()) {
    Laurent2 g = f;
    const int v = strip_cyclotomic(g, phi, std::numeric_limits<int>::max());
    pole_order += v * e;
    den = den * g.pow(e);
  }
  Laurent2 num = x.num();
  if (pole_order > 0 && strip_cyclotomic(num, phi, pole_order) < pole_order) {
    throw PoleAtRoot("denominator vanishes at q = exp(2 pi i * " + std::to_string(power) + "/" +
                     std::to_string(d) + ")");
  }
  return CycloFraction(d, reduce_mod_cyclotomic(num, d, power), reduce_mod_cyclotomic(den, d, power));
}

}  // namespace lgkit
