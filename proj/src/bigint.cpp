#include "ordhom/bigint.hpp"

#include <vector>

namespace ordhom {

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  std::vector<BigInt> row(k + 1, BigInt(0));
  row[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

BigInt pow2(std::uint32_t e) {
  BigInt v = 1;
  v <<= e;
  return v;
}

}  // namespace ordhom
