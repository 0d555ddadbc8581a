#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ordhom/poset.hpp"

namespace ordhom {

struct VerifyOptions {
  /// Exhaustive over all isomorphism classes with at most this many elements.
  std::size_t max_size = 5;
  /// Random posets drawn on top of the exhaustive part.
  std::size_t samples = 200;
  std::size_t sample_min = 6;
  std::size_t sample_max = 8;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  std::size_t posets = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

/// Independent counts of h(P) and #D(P) must agree, plus the surjective formula.
void verify_counts(const Poset& p, const std::string& name, VerifyReport& report);

/// Every schematic decomposition (U, B⁺) of R: structural validity, the
/// coefficient recursion against the definition, the two bijections, upper
/// truncation, Σ_T a_T = h, and the corollary where it applies.
void verify_decompositions(const Poset& r, const std::string& name, VerifyReport& report);

VerifyReport run_verification(const VerifyOptions& options, std::ostream* progress = nullptr);

}  // namespace ordhom
