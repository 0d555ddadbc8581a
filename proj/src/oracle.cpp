#include "ordhom/oracle.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ordhom/downsets.hpp"
#include "ordhom/errors.hpp"

namespace ordhom {

namespace {

void charge(std::uint64_t& nodes, std::uint64_t bound) {
  if (++nodes > bound) throw BoundExceeded("search exceeded " + std::to_string(bound) + " nodes");
}

// Strict predecessors of each element, in linear-extension position order.
std::vector<ElementSet> strict_preds(const Poset& p) {
  std::vector<ElementSet> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    out[x] = p.down(x);
    out[x].reset(x);
  }
  return out;
}

}  // namespace

HomCount brute_hom_count(const Poset& p, const Poset& q, std::uint64_t bound) {
  const auto order = linear_extension(p);
  const auto preds = strict_preds(p);
  const auto n = p.size();
  const auto m = q.size();

  std::vector<std::size_t> value(n, 0);
  std::vector<std::size_t> uses(m, 0);
  std::unordered_map<ElementSet, std::uint64_t> tally;
  std::uint64_t nodes = 0;

  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    charge(nodes, bound);
    if (pos == n) {
      ElementSet image;
      for (std::size_t v = 0; v < m; ++v)
        if (uses[v]) image.set(v);
      ++tally[image];
      return;
    }
    const auto x = order[pos];
    for (std::size_t v = 0; v < m; ++v) {
      bool ok = true;
      preds[x].for_each([&](std::size_t y) { ok = ok && q.leq(value[y], v); });
      if (!ok) continue;
      value[x] = v;
      ++uses[v];
      extend(pos + 1);
      --uses[v];
    }
  };
  extend(0);

  HomCount out;
  out.total = 0;
  out.surjective = 0;
  const auto full = q.carrier();
  for (const auto& [image, c] : tally) {
    out.by_image[image] = c;
    out.total += c;
    if (image == full) out.surjective += c;
  }
  return out;
}

std::vector<BigInt> descent_distribution(const Poset& p, std::uint64_t bound) {
  const auto n = p.size();
  const auto natural = linear_extension(p);
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[natural[i]] = i;
  const auto preds = strict_preds(p);

  std::vector<std::uint64_t> w(n == 0 ? 1 : n, 0);
  std::uint64_t nodes = 0;
  ElementSet placed;
  std::function<void(std::size_t, std::size_t, std::size_t)> extend = [&](std::size_t pos, std::size_t last,
                                                                           std::size_t descents) {
    charge(nodes, bound);
    if (pos == n) {
      ++w[descents];
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (placed.test(x) || !preds[x].is_subset_of(placed)) continue;
      placed.set(x);
      const bool descent = pos > 0 && label[last] > label[x];
      extend(pos + 1, x, descents + (descent ? 1 : 0));
      placed.reset(x);
    }
  };
  extend(0, 0, 0);

  std::vector<BigInt> out;
  for (auto c : w) out.emplace_back(c);
  return out;
}

BigInt omega_by_linear_extensions(const Poset& p, std::size_t x, std::uint64_t bound) {
  const auto n = p.size();
  if (x == 0) return n == 0 ? 1 : 0;
  const auto w = descent_distribution(p, bound);
  BigInt total = 0;
  for (std::size_t d = 0; d < w.size(); ++d) {
    if (w[d] == 0) continue;
    total += w[d] * binomial(static_cast<std::uint32_t>(n + x - 1 - d), static_cast<std::uint32_t>(n));
  }
  return total;
}

BigInt h_by_product_c2(const Poset& p) { return enumerate_downsets(product(p, make_chain(2))).size(); }

BigInt constrained_hom_count(const Poset& p, const LevelAssignment& fixed, std::size_t brute_limit) {
  for (const auto& [id, level] : fixed) {
    if (id >= p.size()) throw std::invalid_argument("element id " + std::to_string(id) + " out of range");
    if (level < 1 || level > 3) throw std::invalid_argument("levels must lie in {1, 2, 3}");
  }

  if (p.size() > brute_limit) {
    PairConstraints c;
    for (const auto& [id, level] : fixed) {
      if (level == 1) c.in_lower.set(id);
      if (level == 2) {
        c.out_lower.set(id);
        c.in_upper.set(id);
      }
      if (level == 3) c.out_upper.set(id);
    }
    return constrained_pair_count(p, c);
  }

  const auto order = linear_extension(p);
  const auto preds = strict_preds(p);
  std::vector<int> value(p.size(), 0);
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    charge(nodes, kDefaultSearchBound);
    if (pos == p.size()) {
      ++count;
      return;
    }
    const auto x = order[pos];
    int lo = 1;
    preds[x].for_each([&](std::size_t y) { lo = std::max(lo, value[y]); });
    int hi = 3;
    if (auto it = fixed.find(x); it != fixed.end()) {
      if (it->second < lo) return;
      lo = hi = it->second;
    }
    for (int v = lo; v <= hi; ++v) {
      value[x] = v;
      extend(pos + 1);
    }
  };
  extend(0);
  return count;
}

}  // namespace ordhom
