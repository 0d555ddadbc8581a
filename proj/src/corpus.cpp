#include "ordhom/corpus.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "ordhom/downsets.hpp"

namespace ordhom {

namespace {

std::uint64_t encode(const Poset& p, const std::vector<std::size_t>& order) {
  const auto n = order.size();
  std::uint64_t code = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.less(order[a], order[b])) code |= std::uint64_t{1} << (a * n + b);
  return code;
}

// New maximal element lying above exactly the members of d.
Poset extend_by_top(const Poset& p, const ElementSet& d) {
  const auto n = p.size();
  return Poset::from_relation(n + 1, [&](std::size_t x, std::size_t y) {
    if (y == n) return x == n || d.test(x);
    if (x == n) return false;
    return p.leq(x, y);
  });
}

}  // namespace

std::uint64_t canonical_code(const Poset& p) {
  const auto n = p.size();
  if (n > kMaxCorpusSize) throw std::invalid_argument("canonical_code supports at most 8 elements");

  // Refine by (down-degree, up-degree, neighbour degree profile) and only
  // permute inside a class.
  using Key = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  std::vector<Key> key(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> profile;
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(y, x)) profile.push_back(p.down(y).count() * 16 + p.up(y).count());
    std::sort(profile.begin(), profile.end());
    key[x] = {p.down(x).count(), p.up(x).count(), profile};
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return key[a] < key[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> permute = [&](std::size_t b) {
    if (b == blocks.size()) {
      best = std::min(best, encode(p, order));
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      permute(b + 1);
    } while (std::next_permutation(first, last));
  };
  permute(0);
  return best;
}

std::vector<Poset> posets_up_to_iso(std::size_t n) {
  if (n > kMaxCorpusSize) throw std::invalid_argument("posets_up_to_iso supports at most 8 elements");
  std::vector<Poset> level{Poset{}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Poset> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : level) {
      for (const auto& d : enumerate_downsets(p)) {
        auto q = extend_by_top(p, d);
        if (seen.insert(canonical_code(q)).second) next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  return level;
}

Poset random_poset(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() & 1U) pairs.emplace_back(i, j);
  return Poset::from_covers(n, pairs);
}

}  // namespace ordhom
