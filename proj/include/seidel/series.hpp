#ifndef SEIDEL_SERIES_HPP
#define SEIDEL_SERIES_HPP

#include <ostream>
#include <span>
#include <vector>

#include "seidel/poly.hpp"

namespace seidel {

enum class MatrixMode { classical, degenerate };

// Formal power series in t, truncated at a fixed order N, with Poly
// coefficients. All arithmetic is exact modulo t^{N+1}. Operations never
// change the truncation order implicitly; mixing orders is an error.
//
// EGF convention: the sequence term attached to index n is n! * coeff(n).
class Series {
 public:
  explicit Series(unsigned order) : order_(order), coeffs_(order + 1) {}
  Series(unsigned order, std::vector<Poly> coeffs);

  static Series constant(const Poly& value, unsigned order);
  static Series t(unsigned order);  // the series "t" itself (requires order >= 1)

  unsigned order() const noexcept { return order_; }
  const Poly& coeff(unsigned j) const { return coeffs_.at(j); }
  void set_coeff(unsigned j, Poly value) { coeffs_.at(j) = std::move(value); }

  Poly egf_term(unsigned n) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);  // Cauchy product
  Series operator*(const Poly& scalar) const;
  friend Series operator-(const Series& a);

  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // multiplicative inverse; requires constant term exactly 1
  Series reciprocal() const;

  // formal d/dt; the order drops by one, so order 0 is an error
  Series derivative() const;

  // sum_{k<=N} (*this)^k / k!; requires zero constant term
  Series exp() const;

  // substitution t -> inner; requires inner to have zero constant term
  Series compose(const Series& inner) const;

  friend std::ostream& operator<<(std::ostream& os, const Series& s);

 private:
  unsigned order_;
  std::vector<Poly> coeffs_;
};

// e with lambda-deformation: coefficients falling_factorial(exponent, k) / k!.
Series degenerate_exp(const Poly& exponent, unsigned order);

// (e_deformed(t) - 1)^k / k!; its EGF terms are the degenerate Stirling
// coefficients S(n, k) for k <= n <= order.
Series stirling_column_egf(unsigned k, unsigned order);

// Ordinary-generating-function transform to the final sequence:
// substitutes t -> t/(1-t) and multiplies by 1/(1-t).
Series euler_ogf_transform(const Series& ogf);

// Exponential-generating-function transform to the final sequence.
// Classical mode multiplies by exp(t); degenerate mode by the deformed
// exponential with exponent 1 - l. At l = 0 the two coincide.
Series seidel_transform(const Series& egf, MatrixMode mode);

// EGF / OGF of a term list: needs at least order+1 terms.
Series sequence_egf(std::span<const Poly> terms, unsigned order);
Series sequence_ogf(std::span<const Poly> terms, unsigned order);

}  // namespace seidel

#endif  // SEIDEL_SERIES_HPP
