#include "seidel/poly.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace seidel {

Poly Poly::monomial(unsigned xdeg, unsigned ldeg, const Rational& coeff) {
  Poly p;
  if (!coeff.is_zero()) p.terms_[{xdeg, ldeg}] = coeff;
  return p;
}

Rational Poly::coeff(unsigned xdeg, unsigned ldeg) const {
  auto it = terms_.find({xdeg, ldeg});
  return it == terms_.end() ? Rational() : it->second;
}

unsigned Poly::x_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    if (m.xdeg > d) d = m.xdeg;
  return d;
}

unsigned Poly::lambda_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    if (m.ldeg > d) d = m.ldeg;
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly operator-(const Poly& a) {
  Poly r;
  for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.xdeg + mb.xdeg, ma.ldeg + mb.ldeg}, ca * cb);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

Poly Poly::derivative(Var v) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (v == Var::x) {
      if (m.xdeg == 0) continue;
      r.add_term({m.xdeg - 1, m.ldeg}, c * Rational(static_cast<long long>(m.xdeg)));
    } else {
      if (m.ldeg == 0) continue;
      r.add_term({m.xdeg, m.ldeg - 1}, c * Rational(static_cast<long long>(m.ldeg)));
    }
  }
  return r;
}

Poly Poly::coeff_of_x_power(unsigned d) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.xdeg == d) r.terms_[{0, m.ldeg}] = c;
  return r;
}

namespace {

// Horner evaluation of coefficient list c[0..deg] (by ascending power)
Poly horner(const std::vector<Poly>& by_power, const Poly& value) {
  Poly acc;
  for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) acc = acc * value + *it;
  return acc;
}

}  // namespace

Poly Poly::subst_x(const Poly& replacement) const {
  if (terms_.empty()) return Poly();
  std::vector<Poly> by_power(x_degree() + 1);
  for (const auto& [m, c] : terms_) by_power[m.xdeg].add_term({0, m.ldeg}, c);
  return horner(by_power, replacement);
}

Poly Poly::subst_lambda(const Poly& replacement) const {
  if (terms_.empty()) return Poly();
  std::vector<Poly> by_power(lambda_degree() + 1);
  for (const auto& [m, c] : terms_) by_power[m.ldeg].add_term({m.xdeg, 0}, c);
  return horner(by_power, replacement);
}

Rational Poly::eval(const Rational& at_lambda, const Rational& at_x) const {
  return subst_lambda(Poly(at_lambda)).subst_x(Poly(at_x)).constant_coeff();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    std::string factors;
    if (m.ldeg > 0) {
      factors += "l";
      if (m.ldeg > 1) factors += "^" + std::to_string(m.ldeg);
    }
    if (m.xdeg > 0) {
      if (!factors.empty()) factors += "*";
      factors += "x";
      if (m.xdeg > 1) factors += "^" + std::to_string(m.xdeg);
    }
    if (factors.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += factors;
    } else {
      out += mag.str() + "*" + factors;
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for the polynomial grammar. Beyond the canonical
// export grammar it accepts parenthesized subexpressions and a leading sign,
// both of which appear in hand-written input.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw PolyParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  BigInt parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned parse_exponent() {
    BigInt e = parse_digits();
    if (e > 1000000) fail("exponent too large");
    return static_cast<unsigned>(e);
  }

  Poly parse_sum() {
    skip_ws();
    bool negate = false;
    if (consume('-'))
      negate = true;
    else
      consume('+');
    Poly acc = parse_product();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (consume('+'))
        acc += parse_product();
      else if (consume('-'))
        acc -= parse_product();
      else
        return acc;
    }
  }

  Poly parse_product() {
    Poly acc = parse_factor();
    while (consume('*')) acc *= parse_factor();
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    if (consume('^')) return base.pow(parse_exponent());
    return base;
  }

  Poly parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a term");
    char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return Poly::x();
    }
    if (c == 'l') {
      ++pos_;
      return Poly::lambda();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = parse_sum();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = parse_digits();
      if (consume('/')) {
        skip_ws();
        std::size_t den_pos = pos_;
        BigInt den = parse_digits();
        if (den == 0) throw PolyParseError("zero denominator", den_pos);
        return Poly(Rational(num, den));
      }
      return Poly(Rational(num));
    }
    fail("expected a term");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace seidel
