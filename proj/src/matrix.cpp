#include "seidel/matrix.hpp"

#include <stdexcept>

#include "seidel/combinatorics.hpp"

namespace seidel {

namespace {

Poly mode_lambda(MatrixMode mode) {
  return mode == MatrixMode::degenerate ? Poly::lambda() : Poly();
}

// factorial products with the mode's step: a zero step collapses them to
// powers of arg, which is what the classical identities use (arg = 1)
Poly falling_with_step(const Poly& arg, unsigned n, const Poly& step) {
  Poly r(1);
  for (unsigned j = 0; j < n; ++j) r *= arg - Poly(static_cast<long long>(j)) * step;
  return r;
}

Poly rising_with_step(const Poly& arg, unsigned n, const Poly& step) {
  Poly r(1);
  for (unsigned j = 0; j < n; ++j) r *= arg + Poly(static_cast<long long>(j)) * step;
  return r;
}

}  // namespace

SeidelMatrix::SeidelMatrix(std::vector<Poly> initial, MatrixMode mode) : mode_(mode) {
  if (initial.empty()) throw std::invalid_argument("SeidelMatrix: empty initial sequence");
  size_ = static_cast<unsigned>(initial.size()) - 1;
  rows_.reserve(size_ + 1);
  rows_.push_back(std::move(initial));
  const Poly step = mode_lambda(mode_);
  for (unsigned k = 1; k <= size_; ++k) {
    const auto& prev = rows_.back();
    std::vector<Poly> row(size_ - k + 1);
    for (unsigned n = 0; n + k <= size_; ++n) {
      const Poly weight =
          Poly(1) - Poly(static_cast<long long>(k) - static_cast<long long>(n)) * step;
      row[n] = weight * prev[n] + prev[n + 1];
    }
    rows_.push_back(std::move(row));
  }
}

const Poly& SeidelMatrix::at(unsigned n, unsigned k) const {
  if (k > size_ || n > size_ - k)
    throw std::out_of_range("SeidelMatrix: entry (" + std::to_string(n) + "," +
                            std::to_string(k) + ") outside triangle n+k <= " +
                            std::to_string(size_));
  return rows_[k][n];
}

std::vector<Poly> SeidelMatrix::final_sequence() const {
  std::vector<Poly> out;
  out.reserve(size_ + 1);
  for (unsigned k = 0; k <= size_; ++k) out.push_back(rows_[k][0]);
  return out;
}

nlohmann::ordered_json SeidelMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = mode_ == MatrixMode::degenerate ? "degenerate" : "classical";
  j["size"] = size_;
  auto entries = nlohmann::ordered_json::array();
  for (unsigned k = 0; k <= size_; ++k)
    for (unsigned n = 0; n + k <= size_; ++n) {
      nlohmann::ordered_json e;
      e["n"] = n;
      e["k"] = k;
      e["poly"] = rows_[k][n].str();
      entries.push_back(std::move(e));
    }
  j["entries"] = std::move(entries);
  return j;
}

std::string SeidelMatrix::to_csv() const {
  std::string out = "n,k,poly\n";
  for (unsigned k = 0; k <= size_; ++k)
    for (unsigned n = 0; n + k <= size_; ++n)
      out += std::to_string(n) + "," + std::to_string(k) + "," + rows_[k][n].str() + "\n";
  return out;
}

std::string SeidelMatrix::to_csv(const Rational& at_lambda, const Rational& at_x) const {
  std::string out = "n,k,value\n";
  for (unsigned k = 0; k <= size_; ++k)
    for (unsigned n = 0; n + k <= size_; ++n)
      out += std::to_string(n) + "," + std::to_string(k) + "," +
             rows_[k][n].eval(at_lambda, at_x).str() + "\n";
  return out;
}

Poly final_from_initial(std::span<const Poly> initial, unsigned n, MatrixMode mode) {
  if (n >= initial.size()) throw std::out_of_range("final_from_initial: index out of range");
  const Poly step = mode_lambda(mode);
  const Poly base = Poly(1) - step;
  Poly acc;
  for (unsigned k = 0; k <= n; ++k)
    acc += Poly(binomial_rational(n, k)) * falling_with_step(base, n - k, step) * initial[k];
  return acc;
}

Poly initial_from_final(std::span<const Poly> final, unsigned n, MatrixMode mode) {
  if (n >= final.size()) throw std::out_of_range("initial_from_final: index out of range");
  const Poly step = mode_lambda(mode);
  const Poly base = Poly(1) - step;
  Poly acc;
  for (unsigned k = 0; k <= n; ++k) {
    Poly term = Poly(binomial_rational(n, k)) * rising_with_step(base, n - k, step) * final[k];
    if ((n - k) % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

std::pair<Poly, Poly> lemma21_sides(const SeidelMatrix& m, unsigned n, unsigned l) {
  if (l > n) throw std::invalid_argument("lemma21_sides: l must satisfy 0 <= l <= n");
  const Poly left = m.at(1, n);
  const Poly step = mode_lambda(m.mode());
  const Poly base =
      Poly(1) - Poly(static_cast<long long>(n) - static_cast<long long>(l)) * step;
  Poly right;
  for (unsigned k = 0; k <= l; ++k)
    right += Poly(binomial_rational(l, k)) * falling_with_step(base, l - k, step) * m.at(k + 1, n - l);
  return {left, right};
}

}  // namespace seidel
