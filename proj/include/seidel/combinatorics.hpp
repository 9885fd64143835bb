#ifndef SEIDEL_COMBINATORICS_HPP
#define SEIDEL_COMBINATORICS_HPP

#include "seidel/rational.hpp"

namespace seidel {

// n!, exact; memoized across calls (thread-safe, compute-once semantics)
BigInt factorial(unsigned n);

// binomial coefficient C(n, k); zero for k > n; memoized Pascal rows
BigInt binomial(unsigned n, unsigned k);

inline Rational factorial_rational(unsigned n) { return Rational(factorial(n)); }
inline Rational binomial_rational(unsigned n, unsigned k) { return Rational(binomial(n, k)); }

}  // namespace seidel

#endif  // SEIDEL_COMBINATORICS_HPP
