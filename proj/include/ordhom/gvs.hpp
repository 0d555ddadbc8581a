#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ordhom/bigint.hpp"
#include "ordhom/downsets.hpp"
#include "ordhom/element_set.hpp"
#include "ordhom/poset.hpp"

namespace ordhom {

/// A poset R split into a lower part P = R|X and an upper part Q = R|Y, linked
/// by an up-set B⁻ of P, a down-set B⁺ of Q and a map σ from the down-sets of
/// S⁺ = Q|B⁺ to subsets of B⁻.  All sets are in R's element ids.
///
/// Required: no element of Y lies below an element of X, and for every
/// T ∈ D(S⁺):  σ(T) ⊆ X ∩ ↓T ⊆ ↓σ(T).  validate_gvs() checks all of it.
struct GvsDecomposition {
  Poset r;
  ElementSet x;
  ElementSet y;
  ElementSet b_minus;
  ElementSet b_plus;
  std::map<ElementSet, ElementSet> sigma;

  SubPoset lower() const { return induced(r, x); }
  SubPoset upper() const { return induced(r, y); }
};

/// Assembles a decomposition with a caller-supplied σ; X is the complement of Y.
GvsDecomposition make_decomposition(Poset r, const ElementSet& y, const ElementSet& b_minus,
                                    const ElementSet& b_plus, std::map<ElementSet, ElementSet> sigma);

/// The always-available choice: P = R ∖ U, Q = R|U, B⁻ the up-set of P
/// generated by the P-points covered by points of B⁺, σ(T) = B⁻ ∩ ↓T.
/// B⁻ may come out empty.  Throws std::invalid_argument unless U is a nonempty
/// proper up-set and B⁺ a nonempty down-set of R|U.
GvsDecomposition build_schematic(const Poset& r, const ElementSet& u, const ElementSet& b_plus);

/// The frame used for products W × C_k (k >= 2): Q is the top layer W × {k},
/// S⁺ = Q, S⁻ = W × {k-1}, and σ shifts a top-layer set one level down.
/// `r` must be product(w, make_chain(k)).
GvsDecomposition product_chain_frame(const Poset& w, std::size_t k);

/// First violated invariant, or nullopt.  Iterates all of D(S⁺).
std::optional<std::string> validate_gvs(const GvsDecomposition& g);

/// a_T(R) straight from its definition: Σ_{D ∈ D(R), D ∩ Y = T} #E_D(R).
/// Throws std::invalid_argument if T ∉ D(Q).
BigInt a_coeff_direct(const GvsDecomposition& g, const ElementSet& t);

/// Outcome of a bijection check; `detail` names a counterexample on failure.
struct IsoCheck {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// D ↦ D ∖ T maps J_T(R) onto {D' ∈ D(P) : σ(T) ⊆ D'} bijectively, preserving
/// inclusion in both directions.  Requires T ∈ D(S⁺).
IsoCheck check_tau_iso(const GvsDecomposition& g, const ElementSet& t);

/// D ↦ D ∖ ↓N maps {D ∈ D(R) : N ⊆ D} onto D(R ∖ ↓N) bijectively, preserving
/// inclusion in both directions.  Requires N ∈ D(Q).
IsoCheck check_beta_iso(const GvsDecomposition& g, const ElementSet& n);

/// Truncating the upper part to a down-set Y' of Q leaves every a_T with
/// T ∈ D(Q|Y') unchanged.  Requires Y' ∈ D(Q).
IsoCheck check_upper_truncation(const GvsDecomposition& g, const ElementSet& y_prime);

/// a_T of the sub-poset R|carrier whose upper part is `upper`
/// (an up-set of R|carrier); all arguments in R's ids.
using CoefficientProvider =
    std::function<BigInt(const ElementSet& carrier, const ElementSet& upper, const ElementSet& t)>;
/// h of the sub-poset R|carrier.
using HProvider = std::function<BigInt(const ElementSet& carrier)>;

/// Reference provider: computes coefficients of induced sub-posets of one R
/// from their down-set lattices and caches them per (carrier, upper).
class DirectCoefficients {
 public:
  explicit DirectCoefficients(Poset r) : r_(std::move(r)) {}

  BigInt a(const ElementSet& carrier, const ElementSet& upper, const ElementSet& t);
  BigInt h(const ElementSet& carrier);
  /// All of a_T for one (carrier, upper) pair.
  const Coefficients& table(const ElementSet& carrier, const ElementSet& upper);

  CoefficientProvider provider() {
    return [this](const ElementSet& c, const ElementSet& u, const ElementSet& t) { return a(c, u, t); };
  }
  HProvider h_provider() {
    return [this](const ElementSet& c) { return h(c); };
  }

 private:
  Poset r_;
  std::map<std::pair<ElementSet, ElementSet>, Coefficients> tables_;
  std::map<ElementSet, BigInt> h_;
};

inline constexpr std::size_t kMaxInclusionExclusionPoints = 20;

/// a_T(R) for T ∈ D(S⁺) via the recursion
///   Σ_{U ∈ D(S⁻), σ(T) ⊆ U} a_U(P)
///   + Σ_{∅ ≠ N ⊆ M ∩ T} (-1)^{|N|-1} a_{T∖N}(P⁺ ∖ ↓N),
/// M the minimal points of Q and P⁺ = R|(X ∪ B⁺).  Sub-coefficients come from
/// `oracle`: a_U(P) is requested with carrier X and upper part B⁻, the
/// correction terms with carrier (X ∪ B⁺) ∖ ↓N and upper part B⁺ ∖ N.
BigInt a_coeff_theorem2(const GvsDecomposition& g, const ElementSet& t, const CoefficientProvider& oracle);

/// h(R) when Q has a minimum ⊥ and σ is an order isomorphism D(S⁺) -> D(S⁻):
///   h(P⁺ ∖ ↓⊥) + Σ_{D ∈ D(Q) ∖ D(S⁺)} a_D(R) + Σ_{T ∈ D(S⁻)} #↓T · a_T(P).
/// Throws std::invalid_argument when either precondition fails.
BigInt h_via_corollary(const GvsDecomposition& g, const CoefficientProvider& oracle, const HProvider& h_oracle);

/// Number of surjective homomorphisms P -> C3 by inclusion-exclusion over
/// the omitted values: h - 3 #D(P) + 3 (0 for the empty poset).
BigInt surjective_count(const BigInt& h, const BigInt& num_downsets, bool empty_poset = false);
BigInt surjective_count(const Poset& p);

}  // namespace ordhom
