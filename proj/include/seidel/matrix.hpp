#ifndef SEIDEL_MATRIX_HPP
#define SEIDEL_MATRIX_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seidel/series.hpp"

namespace seidel {

// Triangular table a(n, k) built from a seed sequence by the two-term
// recurrence:
//   classical:   a(n, k) = a(n, k-1) + a(n+1, k-1)
//   degenerate:  a(n, k) = (1 - (k-n) l) a(n, k-1) + a(n+1, k-1)
// Row k = 0 is the seed; a seed of length size+1 determines exactly the
// triangle n + k <= size. Addressing outside it is an error, not a zero.
// The degenerate recurrence at l = 0 is the classical one.
class SeidelMatrix {
 public:
  SeidelMatrix(std::vector<Poly> initial, MatrixMode mode);

  MatrixMode mode() const noexcept { return mode_; }
  unsigned size() const noexcept { return size_; }

  const Poly& at(unsigned n, unsigned k) const;

  std::vector<Poly> initial_sequence() const { return rows_.front(); }
  // left column a(0, k), k = 0..size
  std::vector<Poly> final_sequence() const;

  // {"mode": ..., "size": ..., "entries": [{"n":..., "k":..., "poly":...}]},
  // entries listed row-major by k
  nlohmann::ordered_json to_json() const;

  // header n,k,poly; or n,k,value with exact rationals when both evaluation
  // points are supplied
  std::string to_csv() const;
  std::string to_csv(const Rational& at_lambda, const Rational& at_x) const;

 private:
  MatrixMode mode_;
  unsigned size_;
  std::vector<std::vector<Poly>> rows_;  // rows_[k][n], n = 0..size-k
};

// Closed-form final sequence entry: the weighted binomial sum over the seed.
// Equals final_sequence()[n] of the built matrix, exactly.
Poly final_from_initial(std::span<const Poly> initial, unsigned n, MatrixMode mode);

// Inverse transform recovering the seed from the final sequence.
Poly initial_from_final(std::span<const Poly> final, unsigned n, MatrixMode mode);

// The two sides of the row-one unrolling identity
//   a(1, n) = sum_{k=0..l} C(l,k) (1-(n-l)l')_{l-k} a(k+1, n-l)
// for 0 <= l <= n, returned as (left, right); callers assert equality.
std::pair<Poly, Poly> lemma21_sides(const SeidelMatrix& m, unsigned n, unsigned l);

}  // namespace seidel

#endif  // SEIDEL_MATRIX_HPP
