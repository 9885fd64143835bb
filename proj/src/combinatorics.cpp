#include "seidel/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace seidel {

namespace {
std::mutex table_mutex;
}

BigInt factorial(unsigned n) {
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard<std::mutex> lock(table_mutex);
  while (table.size() <= n) table.push_back(table.back() * BigInt(table.size()));
  return table[n];
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  std::lock_guard<std::mutex> lock(table_mutex);
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1, BigInt(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

}  // namespace seidel
