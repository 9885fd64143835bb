#include "seidel/series.hpp"

#include <stdexcept>
#include <utility>

#include "seidel/combinatorics.hpp"
#include "seidel/sequences.hpp"

namespace seidel {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("Series: truncation orders do not match");
}

}  // namespace

Series::Series(unsigned order, std::vector<Poly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(order_) + 1)
    throw std::invalid_argument("Series: coefficient list must have order+1 entries");
}

Series Series::constant(const Poly& value, unsigned order) {
  Series s(order);
  s.coeffs_[0] = value;
  return s;
}

Series Series::t(unsigned order) {
  if (order < 1) throw std::invalid_argument("Series::t: order must be >= 1");
  Series s(order);
  s.coeffs_[1] = Poly(1);
  return s;
}

Poly Series::egf_term(unsigned n) const { return coeff(n) * Poly(factorial_rational(n)); }

Series operator+(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series r(a.order_);
  for (unsigned j = 0; j <= a.order_; ++j) r.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series r(a.order_);
  for (unsigned j = 0; j <= a.order_; ++j) r.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
  return r;
}

Series operator-(const Series& a) {
  Series r(a.order_);
  for (unsigned j = 0; j <= a.order_; ++j) r.coeffs_[j] = -a.coeffs_[j];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series r(a.order_);
  for (unsigned i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= a.order_; ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

Series Series::operator*(const Poly& scalar) const {
  Series r(order_);
  for (unsigned j = 0; j <= order_; ++j) r.coeffs_[j] = coeffs_[j] * scalar;
  return r;
}

Series Series::reciprocal() const {
  if (coeffs_[0] != Poly(1))
    throw std::domain_error("Series::reciprocal: constant term must be 1");
  Series r(order_);
  r.coeffs_[0] = Poly(1);
  for (unsigned n = 1; n <= order_; ++n) {
    Poly acc;
    for (unsigned j = 1; j <= n; ++j) acc += coeffs_[j] * r.coeffs_[n - j];
    r.coeffs_[n] = -acc;
  }
  return r;
}

Series Series::derivative() const {
  if (order_ == 0) throw std::invalid_argument("Series::derivative: order 0");
  Series r(order_ - 1);
  for (unsigned j = 0; j < order_; ++j)
    r.coeffs_[j] = coeffs_[j + 1] * Poly(Rational(static_cast<long long>(j) + 1));
  return r;
}

Series Series::exp() const {
  if (!coeffs_[0].is_zero())
    throw std::domain_error("Series::exp: constant term must be 0");
  Series result = Series::constant(Poly(1), order_);
  Series power = Series::constant(Poly(1), order_);
  for (unsigned k = 1; k <= order_; ++k) {
    power = power * *this;
    result = result + power * Poly(Rational(BigInt(1), factorial(k)));
  }
  return result;
}

Series Series::compose(const Series& inner) const {
  require_same_order(*this, inner);
  if (!inner.coeffs_[0].is_zero())
    throw std::domain_error("Series::compose: inner constant term must be 0");
  Series acc = Series::constant(coeffs_[order_], order_);
  for (unsigned j = order_; j-- > 0;) {
    acc = acc * inner;
    acc.coeffs_[0] += coeffs_[j];
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
  os << "[order " << s.order_ << "]";
  for (unsigned j = 0; j <= s.order_; ++j) os << " (" << s.coeffs_[j] << ")";
  return os;
}

Series degenerate_exp(const Poly& exponent, unsigned order) {
  Series s(order);
  Poly product(1);
  const Poly step = Poly::lambda();
  for (unsigned k = 0; k <= order; ++k) {
    if (k > 0) product *= exponent - Poly(static_cast<long long>(k - 1)) * step;
    s.set_coeff(k, product * Poly(Rational(BigInt(1), factorial(k))));
  }
  return s;
}

Series stirling_column_egf(unsigned k, unsigned order) {
  if (k > order) throw std::invalid_argument("stirling_column_egf: k > order");
  Series base = degenerate_exp(Poly(1), order) - Series::constant(Poly(1), order);
  Series power = Series::constant(Poly(1), order);
  for (unsigned j = 0; j < k; ++j) power = power * base;
  return power * Poly(Rational(BigInt(1), factorial(k)));
}

Series euler_ogf_transform(const Series& ogf) {
  const unsigned n = ogf.order();
  // t/(1-t) = t + t^2 + ... ; 1/(1-t) = 1 + t + t^2 + ...
  Series inner(n);
  Series geometric(n);
  geometric.set_coeff(0, Poly(1));
  for (unsigned j = 1; j <= n; ++j) {
    inner.set_coeff(j, Poly(1));
    geometric.set_coeff(j, Poly(1));
  }
  return ogf.compose(inner) * geometric;
}

Series seidel_transform(const Series& egf, MatrixMode mode) {
  const unsigned n = egf.order();
  Series multiplier(n);
  if (mode == MatrixMode::degenerate) {
    multiplier = degenerate_exp(Poly(1) - Poly::lambda(), n);
  } else {
    for (unsigned k = 0; k <= n; ++k)
      multiplier.set_coeff(k, Poly(Rational(BigInt(1), factorial(k))));
  }
  return multiplier * egf;
}

Series sequence_egf(std::span<const Poly> terms, unsigned order) {
  if (terms.size() < static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("sequence_egf: need at least order+1 terms");
  Series s(order);
  for (unsigned n = 0; n <= order; ++n)
    s.set_coeff(n, terms[n] * Poly(Rational(BigInt(1), factorial(n))));
  return s;
}

Series sequence_ogf(std::span<const Poly> terms, unsigned order) {
  if (terms.size() < static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("sequence_ogf: need at least order+1 terms");
  Series s(order);
  for (unsigned n = 0; n <= order; ++n) s.set_coeff(n, terms[n]);
  return s;
}

}  // namespace seidel
