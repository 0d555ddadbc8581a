#include "ordhom/downsets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "ordhom/errors.hpp"

namespace ordhom {

DownSetLattice::DownSetLattice(Poset base, std::vector<ElementSet> sets)
    : base_(std::move(base)), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), BySizeThenValue{});
}

std::optional<std::size_t> DownSetLattice::index_of(const ElementSet& d) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), d, BySizeThenValue{});
  if (it == sets_.end() || *it != d) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

std::vector<std::uint64_t> DownSetLattice::e_counts() const {
  const auto n = sets_.size();
  std::vector<std::uint64_t> counts(n, 0);
  // Sorted by cardinality: a subset of D can only sit at an index whose set is
  // no larger, so the scan stops at the first strictly larger set.
  std::size_t layer_end = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto size_i = sets_[i].count();
    while (layer_end < n && sets_[layer_end].count() <= size_i) ++layer_end;
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < layer_end; ++j)
      if (sets_[j].is_subset_of(sets_[i])) ++c;
    counts[i] = c;
  }
  return counts;
}

std::string DownSetLattice::dump() const {
  std::string out;
  for (const auto& d : sets_) {
    out += d.to_bits(base_.size());
    out += '\n';
  }
  return out;
}

DownSetLattice enumerate_downsets(const Poset& p, std::size_t bound) {
  const auto order = linear_extension(p);
  const auto n = order.size();
  std::vector<ElementSet> strict_below(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    strict_below[pos] = p.down(order[pos]);
    strict_below[pos].reset(order[pos]);
  }

  std::vector<ElementSet> found;
  std::function<void(std::size_t, ElementSet&)> extend = [&](std::size_t pos, ElementSet& cur) {
    if (pos == n) {
      if (found.size() >= bound)
        throw BoundExceeded("more than " + std::to_string(bound) + " down-sets");
      found.push_back(cur);
      return;
    }
    extend(pos + 1, cur);
    if (strict_below[pos].is_subset_of(cur)) {
      cur.set(order[pos]);
      extend(pos + 1, cur);
      cur.reset(order[pos]);
    }
  };
  ElementSet cur;
  extend(0, cur);
  return DownSetLattice(p, std::move(found));
}

Poset lattice_as_poset(const DownSetLattice& lattice) {
  std::vector<std::string> labels;
  for (const auto& d : lattice) labels.push_back(d.to_bits(lattice.base().size()));
  return Poset::from_relation(
      lattice.size(), [&](std::size_t a, std::size_t b) { return lattice[a].is_subset_of(lattice[b]); },
      std::move(labels));
}

BigInt h_by_summation(const DownSetLattice& lattice) {
  BigInt total = 0;
  for (auto c : lattice.e_counts()) total += c;
  return total;
}

BigInt h_by_summation(const Poset& p, std::size_t bound) { return h_by_summation(enumerate_downsets(p, bound)); }

BigInt count_E(const DownSetLattice& lattice, const ElementSet& d) {
  if (!is_downset(lattice.base(), d)) throw std::invalid_argument("count_E: set is not a down-set of the base poset");
  std::uint64_t c = 0;
  for (const auto& e : lattice)
    if (e.is_subset_of(d)) ++c;
  return c;
}

namespace {

void require_upset(const Poset& r, const ElementSet& y) {
  if (!is_upset(r, y)) throw std::invalid_argument("the given set is not an up-set of the poset");
}

// Down-sets of R|Y lifted to R's ids, in the lattice order of R|Y.
std::vector<ElementSet> lifted_downsets(const Poset& r, const ElementSet& y, std::size_t bound) {
  auto sub = induced(r, y);
  std::vector<ElementSet> out;
  for (const auto& t : enumerate_downsets(sub.poset, bound)) out.push_back(sub.lift(t));
  return out;
}

}  // namespace

std::vector<DownSetGroup> partition_JT(const Poset& r, const ElementSet& y, std::size_t bound) {
  require_upset(r, y);
  std::vector<DownSetGroup> groups;
  std::unordered_map<ElementSet, std::size_t> slot;
  for (const auto& t : lifted_downsets(r, y, bound)) {
    slot.emplace(t, groups.size());
    groups.push_back({t, {}});
  }
  for (const auto& d : enumerate_downsets(r, bound)) groups[slot.at(d & y)].members.push_back(d);
  return groups;
}

Coefficients a_coefficients(const Poset& r, const ElementSet& y, std::size_t bound) {
  require_upset(r, y);
  Coefficients out;
  for (const auto& t : lifted_downsets(r, y, bound)) out.emplace(t, 0);
  auto lattice = enumerate_downsets(r, bound);
  auto counts = lattice.e_counts();
  for (std::size_t i = 0; i < lattice.size(); ++i) out.at(lattice[i] & y) += counts[i];
  return out;
}

BigInt constrained_pair_count(const Poset& p, const PairConstraints& c, std::size_t bound) {
  const auto carrier = p.carrier();
  for (const auto* s : {&c.in_lower, &c.out_lower, &c.in_upper, &c.out_upper})
    if (!s->is_subset_of(carrier)) throw std::invalid_argument("constraint set outside the carrier");

  auto lattice = enumerate_downsets(p, bound);
  std::vector<const ElementSet*> lower, upper;
  for (const auto& d : lattice) {
    if (c.in_lower.is_subset_of(d) && !c.out_lower.intersects(d)) lower.push_back(&d);
    if (c.in_upper.is_subset_of(d) && !c.out_upper.intersects(d)) upper.push_back(&d);
  }
  BigInt total = 0;
  for (const auto* d2 : upper) {
    std::uint64_t k = 0;
    for (const auto* d1 : lower)
      if (d1->is_subset_of(*d2)) ++k;
    total += k;
  }
  return total;
}

}  // namespace ordhom
