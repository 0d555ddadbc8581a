#pragma once

// Deliberately slow reference counts, independent of the library's search
// and lattice code.  Only the relation of the input poset is consulted.

#include <cstdint>
#include <vector>

#include "ordhom/poset.hpp"

namespace naive {

inline bool monotone(const ordhom::Poset& p, const ordhom::Poset& q, const std::vector<std::size_t>& f) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !q.leq(f[x], f[y])) return false;
  return true;
}

/// Every map P -> Q, odometer style.
inline std::uint64_t hom_count(const ordhom::Poset& p, const ordhom::Poset& q, bool surjective_only = false) {
  const auto n = p.size();
  const auto m = q.size();
  if (n == 0) return surjective_only ? (m == 0) : 1;
  if (m == 0) return 0;
  std::vector<std::size_t> f(n, 0);
  std::uint64_t count = 0;
  while (true) {
    if (monotone(p, q, f)) {
      if (!surjective_only) {
        ++count;
      } else {
        std::vector<bool> hit(m, false);
        for (auto v : f) hit[v] = true;
        bool all = true;
        for (bool b : hit) all = all && b;
        count += all;
      }
    }
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

/// Tests all 2^n subsets for downward closure.
inline std::vector<std::uint64_t> downsets(const ordhom::Poset& p) {
  const auto n = p.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool closed = true;
    for (std::size_t y = 0; y < n && closed; ++y)
      if (s >> y & 1)
        for (std::size_t x = 0; x < n; ++x)
          if (p.leq(x, y) && !(s >> x & 1)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

inline std::uint64_t downset_count(const ordhom::Poset& p) { return downsets(p).size(); }

/// h(P) as pairs D1 ⊆ D2 of down-sets.
inline std::uint64_t h_pairs(const ordhom::Poset& p) {
  const auto d = downsets(p);
  std::uint64_t count = 0;
  for (auto a : d)
    for (auto b : d)
      if ((a & ~b) == 0) ++count;
  return count;
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace naive
