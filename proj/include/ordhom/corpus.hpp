#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "ordhom/poset.hpp"

namespace ordhom {

inline constexpr std::size_t kMaxCorpusSize = 8;

/// One poset per isomorphism class on exactly n elements (n ≤ 8).  Every
/// representative is grown by adding maximal elements, so its ids are a
/// natural labeling.
std::vector<Poset> posets_up_to_iso(std::size_t n);

/// Canonical strict-order code, equal for isomorphic posets (n ≤ 8).
std::uint64_t canonical_code(const Poset& p);

/// For each pair i < j a fair coin decides whether i < j; the result is
/// transitively closed.  Same seed, same sequence.
Poset random_poset(std::size_t n, std::mt19937_64& rng);

}  // namespace ordhom
