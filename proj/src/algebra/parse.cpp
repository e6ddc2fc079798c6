#include "lgkit/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>

#include "lgkit/errors.hpp"

namespace lgkit {

namespace {

using Resolver = std::function<std::optional<RationalFn>(std::string_view)>;

class Parser {
 public:
  Parser(std::string_view text, Resolver resolve) : text_(text), resolve_(std::move(resolve)) {}

  RationalFn parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    RationalFn r = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) +
                     "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool at_power() {
    skip_space();
    return text_.substr(pos_, 1) == "^" || text_.substr(pos_, 2) == "**";
  }

  bool at_operand() {
    skip_space();
    if (pos_ == text_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '(' || c >= 0x80;
  }

  RationalFn expression() {
    RationalFn acc = term();
    while (true) {
      if (accept("+")) {
        acc += term();
      } else if (accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFn term() {
    RationalFn acc = unary();
    while (true) {
      if (text_.substr(pos_, 2) != "**" && accept("*")) {
        acc *= unary();
      } else if (accept("/")) {
        RationalFn d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else if (at_operand()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RationalFn unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  int exponent() {
    skip_space();
    if (accept("(")) {
      int e = exponent();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    bool negative = false;
    if (accept("-")) {
      negative = true;
    } else {
      accept("+");
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    const int e = std::stoi(digits);
    return negative ? -e : e;
  }

  RationalFn power() {
    RationalFn base = atom();
    while (at_power()) {
      if (!accept("**")) accept("^");
      const int e = exponent();
      if (e < 0 && base.is_zero()) fail("negative power of zero");
      base = base.pow(e);
    }
    return base;
  }

  RationalFn atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      RationalFn r = expression();
      if (!accept(")")) fail("expected ')'");
      return r;
    }
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (std::isdigit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFn(Laurent2(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(c) || c >= 0x80) {
      const std::size_t start = pos_;
      while (pos_ < text_.size()) {
        const unsigned char d = static_cast<unsigned char>(text_[pos_]);
        if (!(std::isalnum(d) || d == '_' || d >= 0x80)) break;
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (auto value = resolve_(name)) return *value;
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  Resolver resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFn parse_rational(std::string_view text) {
  return Parser(text, [](std::string_view name) -> std::optional<RationalFn> {
           if (name == "t" || name == "tau" || name == "\xCF\x84") return RationalFn(Laurent2::tau());
           if (name == "q") return RationalFn(Laurent2::q());
           return std::nullopt;
         }).parse();
}

Laurent2 parse_laurent(std::string_view text) {
  RationalFn r = parse_rational(text);
  if (!r.is_polynomial()) {
    throw ParseError("\"" + std::string(text) + "\" is not a Laurent polynomial");
  }
  return r.num();
}

HalfLaurent parse_half_laurent(std::string_view text) {
  // s is carried as tau, so t = s^2 becomes tau^2.
  RationalFn r = Parser(text, [](std::string_view name) -> std::optional<RationalFn> {
                   if (name == "s") return RationalFn(Laurent2::tau());
                   if (name == "t") return RationalFn(Laurent2::tau(2));
                   return std::nullopt;
                 }).parse();
  if (!r.is_polynomial()) {
    throw ParseError("\"" + std::string(text) + "\" is not a Laurent polynomial in s");
  }
  HalfLaurent h;
  for (const auto& [e, c] : r.num().terms()) h += HalfLaurent::monomial(c, e.t);
  return h;
}

}  // namespace lgkit
