#ifndef SEIDEL_SEQUENCES_HPP
#define SEIDEL_SEQUENCES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seidel/poly.hpp"

namespace seidel {

// Generalized factorials with lambda-step: the products
//   arg * (arg - l) * (arg - 2l) * ... * (arg - (n-1)l)    (falling)
//   arg * (arg + l) * (arg + 2l) * ... * (arg + (n-1)l)    (rising)
// with the empty product equal to 1.
Poly falling_factorial(const Poly& arg, unsigned n);
Poly rising_factorial(const Poly& arg, unsigned n);

// Classical falling factorial arg * (arg - 1) * ... * (arg - n + 1).
Poly classical_falling_factorial(const Poly& arg, unsigned n);

// Stirling-like connection coefficients: the coefficient of the classical
// falling factorial (x)_k in the expansion of the lambda-falling factorial
// (x)_{n,lambda}. A polynomial in l alone. Rejects k > n.
//
// Two independent routes are provided. The recurrence
//   S(n+1, k) = S(n, k-1) + (k - n*l) * S(n, k)
// is the memoized fast path; the basis-conversion route expands the product
// and peels classical falling factorials from the top degree down. Tests and
// the acceptance suite require the two (plus the generating-function route in
// series.hpp) to agree exactly.
Poly degenerate_stirling2(unsigned n, unsigned k);
Poly degenerate_stirling2_by_basis(unsigned n, unsigned k);

// Bell and Fubini polynomials for the lambda-deformed Stirling family:
//   bell_polynomial(n)   = sum_k S(n,k) x^k
//   fubini_polynomial(n) = sum_k S(n,k) k! x^k
// The corresponding numbers substitute x = 1 and stay symbolic in l.
Poly bell_polynomial(unsigned n);
Poly bell_number(unsigned n);
Poly fubini_polynomial(unsigned n);
Poly fubini_number(unsigned n);

// A named family of seed sequences for the transform machinery.
class Sequence {
 public:
  enum class Kind { bell_numbers, bell_polys, fubini_numbers, fubini_polys, custom };

  static Sequence bell_numbers() { return Sequence(Kind::bell_numbers); }
  static Sequence bell_polys() { return Sequence(Kind::bell_polys); }
  static Sequence fubini_numbers() { return Sequence(Kind::fubini_numbers); }
  static Sequence fubini_polys() { return Sequence(Kind::fubini_polys); }
  static Sequence custom(std::vector<Poly> terms);

  // CLI tokens: bell, bell-poly, fubini, fubini-poly
  static std::optional<Sequence> from_token(std::string_view token);

  Kind kind() const noexcept { return kind_; }
  std::string token() const;

  // first `count` terms, index 0 first; count must be >= 1 and, for custom
  // sequences, within the stored list
  std::vector<Poly> terms(std::size_t count) const;

 private:
  explicit Sequence(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Poly> custom_terms_;
};

}  // namespace seidel

#endif  // SEIDEL_SEQUENCES_HPP
