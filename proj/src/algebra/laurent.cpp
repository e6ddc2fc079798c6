#include "lgkit/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lgkit/int_poly.hpp"

namespace lgkit {

Laurent2::Laurent2(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Laurent2::Laurent2(const mpz_class& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Laurent2 Laurent2::monomial(const mpz_class& c, int et, int eq) {
  Laurent2 r;
  if (c != 0) r.terms_.emplace(Monomial{et, eq}, c);
  return r;
}

bool Laurent2::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{} && terms_.begin()->second == 1;
}

bool Laurent2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool Laurent2::is_q_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.q == 0; });
}

mpz_class Laurent2::coefficient(int et, int eq) const {
  auto it = terms_.find(Monomial{et, eq});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Monomial Laurent2::min_exponents() const {
  Monomial m{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  for (const auto& [e, c] : terms_) {
    m.t = std::min(m.t, e.t);
    m.q = std::min(m.q, e.q);
  }
  return m;
}

Monomial Laurent2::max_exponents() const {
  Monomial m{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
  for (const auto& [e, c] : terms_) {
    m.t = std::max(m.t, e.t);
    m.q = std::max(m.q, e.q);
  }
  return m;
}

mpz_class Laurent2::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void Laurent2::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent2 Laurent2::operator-() const {
  Laurent2 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent2& Laurent2::operator*=(const Laurent2& o) {
  *this = *this * o;
  return *this;
}

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) {
    const auto& [e, c] = *a.terms_.begin();
    return b.shifted(e).scaled(c);
  }
  if (b.is_monomial()) {
    const auto& [e, c] = *b.terms_.begin();
    return a.shifted(e).scaled(c);
  }
  Laurent2Builder acc;
  mpz_class prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      acc.add(ea + eb, prod);
    }
  }
  return acc.build();
}

std::strong_ordering operator<=>(const Laurent2& a, const Laurent2& b) {
  if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    int s = cmp(ia->second, ib->second);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Laurent2 Laurent2::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Laurent2 r = *this;
  if (c == 1) return r;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

Laurent2 Laurent2::shifted(const Monomial& m) const {
  if (m == Monomial{}) return *this;
  Laurent2 r;
  // Shifting preserves the order, so hinted insertion at the end is linear.
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, c);
  return r;
}

Laurent2 Laurent2::divided_exact(const mpz_class& c) const {
  Laurent2 r = *this;
  for (auto& [e, x] : r.terms_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

Laurent2 Laurent2::pow(int k) const {
  if (k < 0) {
    if (!is_monomial() || abs(terms_.begin()->second) != 1) {
      throw std::domain_error("negative power of a non-unit Laurent polynomial");
    }
    const auto& [e, c] = *terms_.begin();
    mpz_class sign = (c < 0 && (k % 2 != 0)) ? -1 : 1;
    return monomial(sign, e.t * k, e.q * k);
  }
  Laurent2 result(1);
  Laurent2 base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Laurent2 Laurent2::involution_q() const {
  Laurent2Builder b;
  for (const auto& [e, c] : terms_) b.add({e.t, -e.q}, c);
  return b.build();
}

Laurent2 Laurent2::scale_q_exponents(int factor) const {
  Laurent2Builder b;
  for (const auto& [e, c] : terms_) b.add({e.t, e.q * factor}, c);
  return b.build();
}

namespace {

mpq_class power(const mpq_class& x, int k) {
  mpq_class base = x;
  if (k < 0) {
    if (x == 0) throw std::domain_error("evaluation at zero of a negative power");
    base = 1 / x;
    k = -k;
  }
  mpq_class r = 1;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return r;
}

void append_factor(std::ostringstream& os, bool& first, const std::string& var, int e) {
  if (e == 0) return;
  if (!first) os << "*";
  os << var;
  if (e != 1) os << "^" << e;
  first = false;
}

}  // namespace

mpq_class Laurent2::evaluate(const mpq_class& t, const mpq_class& q) const {
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) sum += mpq_class(c) * power(t, e.t) * power(q, e.q);
  return sum;
}

std::string Laurent2::to_string(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, c] : terms_) {
    if (first_term) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    bool first = true;
    if (a != 1 || e == Monomial{}) {
      os << a;
      first = false;
    }
    append_factor(os, first, names.t, e.t);
    append_factor(os, first, names.q, e.q);
    first_term = false;
  }
  return os.str();
}

void Laurent2Builder::add(const Monomial& m, const mpz_class& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

Laurent2 Laurent2Builder::build() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  Laurent2 r;
  r.terms_ = std::move(terms_);
  terms_.clear();
  return r;
}

std::optional<Laurent2> divide_exact(const Laurent2& a, const Laurent2& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Laurent2{};
  if (b.is_monomial()) {
    const auto& [eb, cb] = b.leading();
    for (const auto& [e, c] : a.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    }
    return a.divided_exact(cb).shifted(Monomial{} - eb);
  }
  // Shift both into the polynomial ring and run lex-order division there;
  // the leading term of each remainder must be divisible by lt(b).
  const Monomial sa = a.min_exponents();
  const Monomial sb = b.min_exponents();
  Laurent2 rem = a.shifted(Monomial{} - sa);
  const Laurent2 divisor = b.shifted(Monomial{} - sb);
  const auto [lead_e, lead_c] = divisor.leading();
  Laurent2Builder quotient;
  while (!rem.is_zero()) {
    const auto [e, c] = rem.leading();
    if (e.t < lead_e.t || e.q < lead_e.q) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    const mpz_class f = c / lead_c;
    const Monomial shift = e - lead_e;
    quotient.add(shift, f);
    rem -= divisor.shifted(shift).scaled(f);
  }
  return quotient.build().shifted(sa - sb);
}

namespace {

// Polynomial in tau whose coefficients are polynomials in q.
using BiPoly = std::vector<IntPoly>;

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BiPoly to_bipoly(const Laurent2& p) {
  const Monomial s = p.min_exponents();
  const Monomial hi = p.max_exponents();
  std::vector<std::vector<mpz_class>> dense(static_cast<std::size_t>(hi.t - s.t + 1),
                                            std::vector<mpz_class>(static_cast<std::size_t>(hi.q - s.q + 1)));
  for (const auto& [e, c] : p.terms()) {
    dense[static_cast<std::size_t>(e.t - s.t)][static_cast<std::size_t>(e.q - s.q)] = c;
  }
  BiPoly r;
  r.reserve(dense.size());
  for (auto& row : dense) r.emplace_back(std::move(row));
  trim(r);
  return r;
}

Laurent2 from_bipoly(const BiPoly& p) {
  Laurent2Builder b;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& cs = p[i].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j] != 0) b.add({static_cast<int>(i), static_cast<int>(j)}, cs[j]);
    }
  }
  return b.build();
}

IntPoly bi_content(const BiPoly& p) {
  IntPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0 && abs(g.leading()) == 1) break;
  }
  return g;
}

BiPoly bi_divide(const BiPoly& p, const IntPoly& c) {
  BiPoly r;
  r.reserve(p.size());
  for (const auto& x : p) {
    auto d = divide_exact(x, c);
    if (!d) throw std::logic_error("bivariate content division failed");
    r.push_back(std::move(*d));
  }
  return r;
}

BiPoly bi_primitive(const BiPoly& p) {
  if (p.empty()) return p;
  return bi_divide(p, bi_content(p));
}

BiPoly bi_prem(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  const std::size_t db = b.size() - 1;
  const IntPoly& lb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const IntPoly lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - lr * b[i];
    trim(r);
  }
  return r;
}

}  // namespace

Laurent2 gcd(const Laurent2& a, const Laurent2& b) {
  if (a.is_zero() && b.is_zero()) return {};
  const Laurent2& nz = a.is_zero() ? b : a;
  if (a.is_zero() || b.is_zero()) {
    Laurent2 r = nz.shifted(Monomial{} - nz.min_exponents());
    return r.leading().second < 0 ? -r : r;
  }
  BiPoly x = to_bipoly(a);
  BiPoly y = to_bipoly(b);
  IntPoly cont = gcd(bi_content(x), bi_content(y));
  x = bi_primitive(x);
  y = bi_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty() && y.size() > 1) {
    BiPoly r = bi_prem(x, y);
    x = std::move(y);
    y = bi_primitive(r);
  }
  BiPoly g;
  if (y.empty()) {
    g = bi_primitive(x);
  } else {
    g = {IntPoly::constant(1)};  // y is a nonzero constant in tau
  }
  for (auto& c : g) c = c * cont;
  Laurent2 r = from_bipoly(g);
  r = r.shifted(Monomial{} - r.min_exponents());
  return r.leading().second < 0 ? -r : r;
}

}  // namespace lgkit
