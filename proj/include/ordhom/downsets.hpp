#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordhom/bigint.hpp"
#include "ordhom/element_set.hpp"
#include "ordhom/poset.hpp"

namespace ordhom {

inline constexpr std::size_t kDefaultDownsetBound = std::size_t{1} << 24;

/// The family D(P) of down-sets of a poset, ordered by cardinality and then
/// by numeric mask value.  Index 0 is always the empty set and the last index
/// the full carrier.
class DownSetLattice {
 public:
  DownSetLattice(Poset base, std::vector<ElementSet> sets);

  const Poset& base() const { return base_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const ElementSet& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  std::optional<std::size_t> index_of(const ElementSet& d) const;
  bool contains(const ElementSet& d) const { return index_of(d).has_value(); }

  /// For every down-set D (by index), #{E in D(P) : E ⊆ D}.
  std::vector<std::uint64_t> e_counts() const;

  /// One line per down-set: its 0/1 characteristic string over element ids.
  std::string dump() const;

 private:
  Poset base_;
  std::vector<ElementSet> sets_;
};

/// Enumerates D(P) by extending along a linear extension: an element is taken
/// only when all of its strict predecessors are already in.  Throws
/// BoundExceeded once more than `bound` down-sets turn up.
DownSetLattice enumerate_downsets(const Poset& p, std::size_t bound = kDefaultDownsetBound);

/// D(P) as a poset under inclusion, one element per down-set in lattice order.
Poset lattice_as_poset(const DownSetLattice& lattice);

/// h(P) = Σ_{D ∈ D(P)} #{E ∈ D(P) : E ⊆ D}, the number of order homomorphisms P -> C3.
BigInt h_by_summation(const Poset& p, std::size_t bound = kDefaultDownsetBound);
BigInt h_by_summation(const DownSetLattice& lattice);

/// #{E ∈ D(P) : E ⊆ D}.  Throws std::invalid_argument if D is not a down-set.
BigInt count_E(const DownSetLattice& lattice, const ElementSet& d);

/// One block J_T(R) = {D ∈ D(R) : D ∩ Y = T}.
struct DownSetGroup {
  ElementSet t;
  std::vector<ElementSet> members;
};

/// Splits D(R) by the trace on the up-set Y.  One group per T ∈ D(R|Y), in
/// the lattice order of D(R|Y); members in the lattice order of D(R).
/// Throws std::invalid_argument if Y is not an up-set of R.
std::vector<DownSetGroup> partition_JT(const Poset& r, const ElementSet& y,
                                       std::size_t bound = kDefaultDownsetBound);

/// a_T(R) keyed by T (a down-set of R|Y, in R's ids).
using Coefficients = std::map<ElementSet, BigInt>;

/// a_T(R) = Σ_{D ∈ J_T(R)} #E_D(R) for every T ∈ D(R|Y).  Y must be an up-set.
Coefficients a_coefficients(const Poset& r, const ElementSet& y, std::size_t bound = kDefaultDownsetBound);

/// Membership constraints on a pair D1 ⊆ D2 of down-sets.  Under the
/// correspondence ξ ↦ (ξ⁻¹{1}, ξ⁻¹{1,2}) with homomorphisms P -> C3,
/// ξ(x) = 1 pins x into D1, ξ(x) = 3 pins x out of D2, and ξ(x) = 2 pins x
/// out of D1 and into D2.
struct PairConstraints {
  ElementSet in_lower;
  ElementSet out_lower;
  ElementSet in_upper;
  ElementSet out_upper;
};

BigInt constrained_pair_count(const Poset& p, const PairConstraints& c,
                              std::size_t bound = kDefaultDownsetBound);

}  // namespace ordhom
