#ifndef SEIDEL_POLY_HPP
#define SEIDEL_POLY_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seidel/rational.hpp"

namespace seidel {

enum class Var { x, lambda };

struct Monomial {
  unsigned xdeg = 0;
  unsigned ldeg = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term precedence: higher x-degree first, then higher lambda-degree.
// Map iteration order is therefore the canonical print order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.xdeg != b.xdeg) return a.xdeg > b.xdeg;
    return a.ldeg > b.ldeg;
  }
};

class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Bivariate polynomial in the symbols l (lambda) and x over Rational.
// Canonical sparse form: no zero coefficient is ever stored, so two
// polynomials are equal iff their term maps are identical.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  Poly(long long value) {
    if (value != 0) terms_[{0, 0}] = Rational(value);
  }
  Poly(const Rational& value) {
    if (!value.is_zero()) terms_[{0, 0}] = value;
  }

  static Poly x() { return monomial(1, 0, Rational(1)); }
  static Poly lambda() { return monomial(0, 1, Rational(1)); }
  static Poly monomial(unsigned xdeg, unsigned ldeg, const Rational& coeff);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
  }

  // coefficient of x^xdeg * l^ldeg (zero when absent)
  Rational coeff(unsigned xdeg, unsigned ldeg) const;
  Rational constant_coeff() const { return coeff(0, 0); }

  unsigned x_degree() const noexcept;       // 0 for the zero polynomial
  unsigned lambda_degree() const noexcept;  // 0 for the zero polynomial
  std::size_t term_count() const noexcept { return terms_.size(); }

  const TermMap& terms() const noexcept { return terms_; }

  friend Poly operator-(const Poly& a);
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;

  // exact formal partial derivative
  Poly derivative(Var v) const;

  // the part of this polynomial with x-degree exactly d, divided by x^d
  // (a polynomial in lambda alone)
  Poly coeff_of_x_power(unsigned d) const;

  // substitution of a polynomial for one symbol (Horner in that symbol)
  Poly subst_x(const Poly& replacement) const;
  Poly subst_lambda(const Poly& replacement) const;

  // full exact evaluation
  Rational eval(const Rational& at_lambda, const Rational& at_x) const;

  // canonical text form; see the grammar in the README
  std::string str() const;
  // parses the polynomial grammar; throws PolyParseError on malformed input
  static Poly parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

}  // namespace seidel

#endif  // SEIDEL_POLY_HPP
