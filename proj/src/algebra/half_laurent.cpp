#include "lgkit/half_laurent.hpp"

#include <stdexcept>

namespace lgkit {

namespace {

std::string render_term(const mpz_class& c, bool first, const std::string& var, int e) {
  std::string out;
  mpz_class mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (e == 0) return out + mag.get_str();
  if (mag != 1) out += mag.get_str() + "*";
  out += var;
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

HalfLaurent::HalfLaurent(long c) {
  if (c != 0) terms_.emplace(0, mpz_class(c));
}

HalfLaurent HalfLaurent::monomial(const mpz_class& c, int e) {
  HalfLaurent r;
  if (c != 0) r.terms_.emplace(e, c);
  return r;
}

void HalfLaurent::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class HalfLaurent::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool HalfLaurent::has_only_even_powers() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) { return a + (-b); }

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

HalfLaurent HalfLaurent::inverted() const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Laurent2 HalfLaurent::substitute_power(int m) const {
  Laurent2Builder b;
  for (const auto& [e, c] : terms_) b.add(Monomial{e * m, 0}, c);
  return b.build();
}

mpq_class HalfLaurent::evaluate(const mpq_class& s) const {
  if (s == 0) throw std::domain_error("evaluation at s = 0");
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class p = 1;
    const mpq_class base = e >= 0 ? s : mpq_class(1 / s);
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    total += c * p;
  }
  return total;
}

std::string HalfLaurent::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  const bool in_t = var == "t";
  if (in_t && !has_only_even_powers()) {
    throw std::domain_error("odd powers of s cannot be written in t = s^2");
  }
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    out += render_term(c, first, var, in_t ? e / 2 : e);
    first = false;
  }
  return out;
}

}  // namespace lgkit
