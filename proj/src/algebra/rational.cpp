#include "lgkit/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lgkit/cyclotomic.hpp"

namespace lgkit {

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> ds;
  for (int i = 1; i <= n; ++i) {
    if (n % i == 0) ds.push_back(i);
  }
  return ds;
}

// Phi_h(x / y) * y^phi(h) for monomials x, y.
Laurent2 homogenised_cyclotomic(int h, const Monomial& x, const Monomial& y) {
  const auto& c = cyclotomic_poly(h).coeffs();
  const int deg = static_cast<int>(c.size()) - 1;
  Laurent2Builder b;
  for (int k = 0; k <= deg; ++k) {
    if (c[static_cast<std::size_t>(k)] == 0) continue;
    Monomial e{x.t * k + y.t * (deg - k), x.q * k + y.q * (deg - k)};
    b.add(e, c[static_cast<std::size_t>(k)]);
  }
  return b.build();
}

struct Unit {
  int sign = 1;
  Monomial shift;
};

// Splits p into unit, content and canonical primitive part.
Laurent2 canonicalise(const Laurent2& p, Unit& unit, mpz_class& content) {
  content = p.content();
  unit.shift = p.min_exponents();
  Laurent2 r = p.shifted(Monomial{} - unit.shift).divided_exact(content);
  unit.sign = 1;
  if (r.leading().second < 0) {
    unit.sign = -1;
    r = -r;
  }
  return r;
}

Laurent2 product(const std::vector<Laurent2>& fs) {
  Laurent2 r(1);
  for (const auto& f : fs) r = r * f;
  return r;
}

}  // namespace

Laurent2 canonical_associate(const Laurent2& p) {
  if (p.is_zero()) return p;
  Unit u;
  mpz_class c;
  return canonicalise(p, u, c);
}

Factorization factor_simple(const Laurent2& p) {
  if (p.is_zero()) throw std::domain_error("factorisation of zero");
  Factorization f;
  Unit unit;
  Laurent2 prim = canonicalise(p, unit, f.content);
  f.sign = unit.sign;
  f.shift = unit.shift;
  if (prim.is_one()) return f;

  bool unit_binomial = prim.size() == 2;
  if (unit_binomial) {
    for (const auto& [e, c] : prim.terms()) unit_binomial = unit_binomial && abs(c) == 1;
  }
  if (!unit_binomial) {
    f.factors.push_back(std::move(prim));
    return f;
  }

  // prim = X + s*Y with X the leading monomial; write X = x^g, Y = y^g.
  auto it = prim.terms().begin();
  const Monomial big = it->first;
  ++it;
  const Monomial small = it->first;
  const int s = it->second > 0 ? 1 : -1;
  int g = std::gcd(std::gcd(big.t, big.q), std::gcd(small.t, small.q));
  const Monomial x{big.t / g, big.q / g};
  const Monomial y{small.t / g, small.q / g};
  std::vector<int> orders;
  if (s < 0) {
    orders = divisors(g);
  } else {
    for (int h : divisors(2 * g)) {
      if (g % h != 0) orders.push_back(h);
    }
  }
  for (int h : orders) {
    Laurent2 piece = homogenised_cyclotomic(h, x, y);
    Unit pu;
    mpz_class pc;
    Laurent2 canon = canonicalise(piece, pu, pc);
    f.sign *= pu.sign;
    f.shift = f.shift + pu.shift;
    f.factors.push_back(std::move(canon));
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

RationalFn::RationalFn(long c) : num_(c) {}

RationalFn::RationalFn(Laurent2 p) : num_(std::move(p)) {}

RationalFn::RationalFn(Laurent2 num, mpz_class content, FactorList factors)
    : num_(std::move(num)), den_content_(std::move(content)), den_factors_(std::move(factors)) {
  reduce();
}

Laurent2 RationalFn::expand_den() const {
  Laurent2 d(den_content_);
  for (const auto& [f, e] : den_factors_) d = d * f.pow(e);
  return d;
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_content_ = 1;
    den_factors_.clear();
    den_ = Laurent2(1);
    return;
  }
  for (auto& [f, e] : den_factors_) {
    while (e > 0) {
      auto quotient = divide_exact(num_, f);
      if (!quotient) break;
      num_ = std::move(*quotient);
      --e;
    }
  }
  std::erase_if(den_factors_, [](const auto& fe) { return fe.second == 0; });
  mpz_class g;
  mpz_class c = num_.content();
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_content_.get_mpz_t());
  if (g != 1) {
    num_ = num_.divided_exact(g);
    mpz_divexact(den_content_.get_mpz_t(), den_content_.get_mpz_t(), g.get_mpz_t());
  }
  den_ = expand_den();
}

RationalFn RationalFn::from_factors(int sign, const std::vector<Laurent2>& num,
                                    const std::vector<Laurent2>& den) {
  std::map<Laurent2, int> num_mult;
  std::map<Laurent2, int> den_mult;
  Monomial shift;
  mpz_class num_content = 1;
  mpz_class den_content = 1;
  for (const auto& p : num) {
    if (p.is_zero()) return RationalFn();
    Factorization f = factor_simple(p);
    sign *= f.sign;
    shift = shift + f.shift;
    num_content *= f.content;
    for (auto& x : f.factors) ++num_mult[x];
  }
  for (const auto& p : den) {
    if (p.is_zero()) throw std::domain_error("zero denominator");
    Factorization f = factor_simple(p);
    sign *= f.sign;
    shift = shift - f.shift;
    den_content *= f.content;
    for (auto& x : f.factors) ++den_mult[x];
  }
  for (auto& [f, e] : den_mult) {
    auto it = num_mult.find(f);
    if (it == num_mult.end()) continue;
    int common = std::min(e, it->second);
    e -= common;
    it->second -= common;
  }
  std::vector<Laurent2> num_factors;
  for (const auto& [f, e] : num_mult) {
    for (int i = 0; i < e; ++i) num_factors.push_back(f);
  }
  std::sort(num_factors.begin(), num_factors.end());
  Laurent2 n = product(num_factors).shifted(shift).scaled(sign * num_content);
  FactorList dl;
  for (const auto& [f, e] : den_mult) {
    if (e > 0) dl.emplace_back(f, e);
  }
  return RationalFn(std::move(n), std::move(den_content), std::move(dl));
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

struct CommonDenominator {
  mpz_class content;
  RationalFn::FactorList factors;
  Laurent2 cofactor_a;
  Laurent2 cofactor_b;
};

CommonDenominator common_denominator(const RationalFn& a, const RationalFn& b) {
  CommonDenominator cd;
  mpz_lcm(cd.content.get_mpz_t(), a.den_content().get_mpz_t(), b.den_content().get_mpz_t());
  cd.cofactor_a = Laurent2(mpz_class(cd.content / a.den_content()));
  cd.cofactor_b = Laurent2(mpz_class(cd.content / b.den_content()));
  const auto& fa = a.den_factors();
  const auto& fb = b.den_factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      cd.factors.push_back(fa[i]);
      cd.cofactor_b = cd.cofactor_b * fa[i].first.pow(fa[i].second);
      ++i;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      cd.factors.push_back(fb[j]);
      cd.cofactor_a = cd.cofactor_a * fb[j].first.pow(fb[j].second);
      ++j;
    } else {
      const int ea = fa[i].second, eb = fb[j].second;
      cd.factors.emplace_back(fa[i].first, std::max(ea, eb));
      if (ea < eb) cd.cofactor_a = cd.cofactor_a * fa[i].first.pow(eb - ea);
      if (eb < ea) cd.cofactor_b = cd.cofactor_b * fa[i].first.pow(ea - eb);
      ++i;
      ++j;
    }
  }
  return cd;
}

}  // namespace

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RationalFn(a.num_ + b.num_);
  CommonDenominator cd = common_denominator(a, b);
  Laurent2 n = a.num_ * cd.cofactor_a + b.num_ * cd.cofactor_b;
  return RationalFn(std::move(n), std::move(cd.content), std::move(cd.factors));
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn();
  if (a.is_polynomial() && b.is_polynomial()) return RationalFn(a.num_ * b.num_);
  RationalFn::FactorList merged;
  const auto& fa = a.den_factors_;
  const auto& fb = b.den_factors_;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      merged.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      merged.push_back(fb[j++]);
    } else {
      merged.emplace_back(fa[i].first, fa[i].second + fb[j].second);
      ++i;
      ++j;
    }
  }
  return RationalFn(a.num_ * b.num_, a.den_content_ * b.den_content_, std::move(merged));
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Factorization f = factor_simple(num_);
  std::map<Laurent2, int> mult;
  for (auto& x : f.factors) ++mult[x];
  FactorList dl(mult.begin(), mult.end());
  Laurent2 n = den_.shifted(Monomial{} - f.shift).scaled(f.sign);
  return RationalFn(std::move(n), std::move(f.content), std::move(dl));
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

RationalFn RationalFn::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFn r(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

RationalFn RationalFn::involution_q() const {
  Laurent2 n = num_.involution_q();
  std::map<Laurent2, int> mult;
  for (const auto& [f, e] : den_factors_) {
    Factorization g = factor_simple(f.involution_q());
    // 1 / (unit * pieces)^e: move the inverse unit into the numerator.
    const Monomial inv{-g.shift.t * e, -g.shift.q * e};
    n = n.shifted(inv);
    if (g.sign < 0 && (e % 2 != 0)) n = -n;
    for (auto& x : g.factors) mult[x] += e;
  }
  FactorList dl(mult.begin(), mult.end());
  return RationalFn(std::move(n), den_content_, std::move(dl));
}

bool RationalFn::same_form(const RationalFn& o) const {
  return num_ == o.num_ && den_content_ == o.den_content_ && den_factors_ == o.den_factors_;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  if (a.same_form(b)) return true;
  if (a.is_polynomial() && b.is_polynomial()) return false;
  CommonDenominator cd = common_denominator(a, b);
  return a.num_ * cd.cofactor_a == b.num_ * cd.cofactor_b;
}

mpq_class RationalFn::evaluate(const mpq_class& t, const mpq_class& q) const {
  mpq_class d = den_.evaluate(t, q);
  if (d == 0) throw std::domain_error("denominator vanishes at the evaluation point");
  return num_.evaluate(t, q) / d;
}

std::string RationalFn::to_string(const VariableNames& names) const {
  if (is_polynomial()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

RationalFn rat_normalize(const Laurent2& num, const Laurent2& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return RationalFn();
  Laurent2 g = gcd(num, den);
  auto n = divide_exact(num, g);
  auto d = divide_exact(den, g);
  if (!n || !d) throw std::logic_error("gcd does not divide its arguments");
  Factorization f = factor_simple(*d);
  std::map<Laurent2, int> mult;
  for (auto& x : f.factors) ++mult[x];
  std::vector<Laurent2> den_factors;
  for (const auto& [x, e] : mult) {
    for (int i = 0; i < e; ++i) den_factors.push_back(x);
  }
  // Rebuild through from_factors so the unit lands in the numerator.
  RationalFn r = RationalFn::from_factors(f.sign, {n->shifted(Monomial{} - f.shift)}, den_factors);
  if (f.content != 1) r = r * RationalFn::from_factors(1, {}, {Laurent2(f.content)});
  return r;
}

}  // namespace lgkit
