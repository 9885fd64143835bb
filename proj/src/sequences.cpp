#include "seidel/sequences.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "seidel/combinatorics.hpp"

namespace seidel {

Poly falling_factorial(const Poly& arg, unsigned n) {
  Poly r(1);
  const Poly step = Poly::lambda();
  for (unsigned j = 0; j < n; ++j) r *= arg - Poly(static_cast<long long>(j)) * step;
  return r;
}

Poly rising_factorial(const Poly& arg, unsigned n) {
  Poly r(1);
  const Poly step = Poly::lambda();
  for (unsigned j = 0; j < n; ++j) r *= arg + Poly(static_cast<long long>(j)) * step;
  return r;
}

Poly classical_falling_factorial(const Poly& arg, unsigned n) {
  Poly r(1);
  for (unsigned j = 0; j < n; ++j) r *= arg - Poly(static_cast<long long>(j));
  return r;
}

namespace {

std::mutex stirling_mutex;

// rows[n][k] built by the recurrence; row 0 = [1]
const Poly& stirling_row_entry(unsigned n, unsigned k) {
  static std::vector<std::vector<Poly>> rows{{Poly(1)}};
  while (rows.size() <= n) {
    const unsigned m = static_cast<unsigned>(rows.size()) - 1;  // extending from row m
    const auto& prev = rows.back();
    std::vector<Poly> row(m + 2);
    const Poly weight_base = Poly(static_cast<long long>(m)) * Poly::lambda();
    for (unsigned j = 0; j <= m + 1; ++j) {
      Poly v;
      if (j >= 1) v += prev[j - 1];
      if (j <= m) v += (Poly(static_cast<long long>(j)) - weight_base) * prev[j];
      row[j] = std::move(v);
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

}  // namespace

Poly degenerate_stirling2(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("degenerate_stirling2: k > n");
  std::lock_guard<std::mutex> lock(stirling_mutex);
  return stirling_row_entry(n, k);
}

Poly degenerate_stirling2_by_basis(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("degenerate_stirling2_by_basis: k > n");
  Poly remainder = falling_factorial(Poly::x(), n);
  std::vector<Poly> coeffs(n + 1);
  for (unsigned d = n + 1; d-- > 0;) {
    Poly c = remainder.coeff_of_x_power(d);
    coeffs[d] = c;
    remainder -= c * classical_falling_factorial(Poly::x(), d);
  }
  if (!remainder.is_zero())
    throw std::logic_error("degenerate_stirling2_by_basis: basis conversion left a remainder");
  return coeffs[k];
}

Poly bell_polynomial(unsigned n) {
  Poly r;
  for (unsigned k = 0; k <= n; ++k)
    r += degenerate_stirling2(n, k) * Poly::monomial(k, 0, Rational(1));
  return r;
}

Poly bell_number(unsigned n) { return bell_polynomial(n).subst_x(Poly(1)); }

Poly fubini_polynomial(unsigned n) {
  Poly r;
  for (unsigned k = 0; k <= n; ++k)
    r += degenerate_stirling2(n, k) * Poly::monomial(k, 0, factorial_rational(k));
  return r;
}

Poly fubini_number(unsigned n) { return fubini_polynomial(n).subst_x(Poly(1)); }

Sequence Sequence::custom(std::vector<Poly> terms) {
  Sequence s(Kind::custom);
  s.custom_terms_ = std::move(terms);
  return s;
}

std::optional<Sequence> Sequence::from_token(std::string_view token) {
  if (token == "bell") return bell_numbers();
  if (token == "bell-poly") return bell_polys();
  if (token == "fubini") return fubini_numbers();
  if (token == "fubini-poly") return fubini_polys();
  return std::nullopt;
}

std::string Sequence::token() const {
  switch (kind_) {
    case Kind::bell_numbers: return "bell";
    case Kind::bell_polys: return "bell-poly";
    case Kind::fubini_numbers: return "fubini";
    case Kind::fubini_polys: return "fubini-poly";
    case Kind::custom: return "custom";
  }
  return "custom";
}

std::vector<Poly> Sequence::terms(std::size_t count) const {
  if (count == 0) throw std::invalid_argument("Sequence::terms: count must be >= 1");
  std::vector<Poly> out;
  out.reserve(count);
  switch (kind_) {
    case Kind::bell_numbers:
      for (std::size_t n = 0; n < count; ++n) out.push_back(bell_number(static_cast<unsigned>(n)));
      break;
    case Kind::bell_polys:
      for (std::size_t n = 0; n < count; ++n)
        out.push_back(bell_polynomial(static_cast<unsigned>(n)));
      break;
    case Kind::fubini_numbers:
      for (std::size_t n = 0; n < count; ++n)
        out.push_back(fubini_number(static_cast<unsigned>(n)));
      break;
    case Kind::fubini_polys:
      for (std::size_t n = 0; n < count; ++n)
        out.push_back(fubini_polynomial(static_cast<unsigned>(n)));
      break;
    case Kind::custom:
      if (count > custom_terms_.size())
        throw std::invalid_argument("Sequence::terms: custom sequence has too few terms");
      out.assign(custom_terms_.begin(), custom_terms_.begin() + static_cast<long>(count));
      break;
  }
  return out;
}

}  // namespace seidel
