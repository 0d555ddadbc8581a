#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "ordhom/bigint.hpp"
#include "ordhom/element_set.hpp"
#include "ordhom/poset.hpp"

namespace ordhom {

/// Tally of all order homomorphisms P -> Q.
struct HomCount {
  BigInt total;
  /// Maps whose image is the whole of Q.
  BigInt surjective;
  /// Count per image set (a subset of Q's carrier).
  std::map<ElementSet, BigInt> by_image;
};

inline constexpr std::uint64_t kDefaultSearchBound = 100'000'000;

/// Backtracking over a linear extension of P; each element may take any value
/// above the values of its predecessors.  Throws BoundExceeded after `bound`
/// search nodes.
HomCount brute_hom_count(const Poset& p, const Poset& q, std::uint64_t bound = kDefaultSearchBound);

/// w_P(d): the number of linear extensions with d descents, relative to the
/// natural labeling given by linear_extension(p).
std::vector<BigInt> descent_distribution(const Poset& p, std::uint64_t bound = kDefaultSearchBound);

/// Ω_P(x) = Σ_d w_P(d) C(#P + x - 1 - d, #P).
BigInt omega_by_linear_extensions(const Poset& p, std::size_t x, std::uint64_t bound = kDefaultSearchBound);

/// h(P) as #D(P × C2).
BigInt h_by_product_c2(const Poset& p);

/// element id -> value in {1, 2, 3}
using LevelAssignment = std::map<std::size_t, int>;

inline constexpr std::size_t kBruteForceSizeLimit = 14;

/// Homomorphisms P -> C3 that take the prescribed values.  Posets larger than
/// `brute_limit` go through constrained_pair_count.  Infeasible constraints
/// give 0; std::invalid_argument for bad ids or levels.
BigInt constrained_hom_count(const Poset& p, const LevelAssignment& fixed,
                             std::size_t brute_limit = kBruteForceSizeLimit);

}  // namespace ordhom
