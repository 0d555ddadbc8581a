#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ordhom/bigint.hpp"
#include "ordhom/downsets.hpp"
#include "ordhom/element_set.hpp"
#include "ordhom/poset.hpp"

namespace ordhom {

// ---------------------------------------------------------------------------
// W × C_k
// ---------------------------------------------------------------------------

/// Coefficients a_T(W' × C_k) for the sub-posets W' = W|U, U an up-set of a
/// fixed W, keyed by the down-sets T of W' (W's ids; T is identified with the
/// top layer T × {k}).
///
///   k = 1:  a_T = #{E ∈ D(W') : E ⊆ T}
///   k ≥ 2:  a_T = Σ_{U ∈ D(W'), T ⊆ U} a_U(W' × C_{k-1})
///               + Σ_{∅ ≠ N ⊆ min(W') ∩ T} (-1)^{|N|-1} a_{T∖N}((W'∖N) × C_k)
///
/// Removing minimal points keeps W'∖N an up-set of W, so (U, k) is a complete
/// memo key.  Not thread-safe: one engine per computation.
class ProductChainEngine {
 public:
  explicit ProductChainEngine(Poset w);

  const Poset& base() const { return w_; }

  const Coefficients& coefficients(const ElementSet& upset, std::size_t k);

  /// h(W' × C_k); 1 for k = 0.
  BigInt h(const ElementSet& upset, std::size_t k);
  BigInt h(std::size_t k) { return h(w_.carrier(), k); }

  /// #D(W' × C_k), read off as a_{W'}(W' × C_k).
  BigInt downset_count(const ElementSet& upset, std::size_t k);

  /// Up-sets with at least one memoized level, largest first then by mask.
  std::vector<ElementSet> memoized_upsets() const;
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const std::vector<ElementSet>& downsets(const ElementSet& upset);

  Poset w_;
  std::map<ElementSet, std::vector<ElementSet>> downsets_;
  std::map<std::pair<ElementSet, std::size_t>, Coefficients> memo_;
};

/// a_T(W × C_k) for T ∈ D(W), in the lattice order of D(W).
struct CoefficientTable {
  ElementSet upset;
  std::size_t level = 0;
  std::vector<std::pair<ElementSet, BigInt>> entries;

  BigInt total() const;
};

CoefficientTable a_table(const Poset& w, std::size_t k);
BigInt h_product_chain(const Poset& w, std::size_t k);

// ---------------------------------------------------------------------------
// C_n × C_k
// ---------------------------------------------------------------------------

/// a[k][n][j] = a_j(C_n × C_k) with T = C_j, and h[k][n] = h(C_n × C_k), for
/// 1 ≤ k ≤ k_max, 0 ≤ n ≤ n_max (index 0 of the k axis is unused).
struct ChainProductTable {
  std::vector<std::vector<std::vector<BigInt>>> a;
  std::vector<std::vector<BigInt>> h;
};

ChainProductTable chain_product_table(std::size_t n_max, std::size_t k_max);
BigInt a_cnck(std::size_t n, std::size_t k, std::size_t j);
BigInt h_cnck(std::size_t n, std::size_t k);

// ---------------------------------------------------------------------------
// Λ × C_k and ◊ × C_k
// ---------------------------------------------------------------------------

/// a_T(Λ × C_k) for T ∈ {∅, {ℓ}, {r}, {ℓ,r}, Λ}; a_l = a_r.
struct LambdaCoeffs {
  BigInt a_empty;
  BigInt a_l;
  BigInt a_lr;
  BigInt a_top;
  BigInt h;
};

/// Contribution of floor f of the down-set pyramid of Λ × C_k:
/// Σ_{i=1}^{k-f} Σ_{j=1}^{k-f} Σ_{φ=0}^{f} (i+φ)(j+φ).  Zero for f ≥ k.
BigInt floor_contribution(std::size_t f, std::size_t k);
/// Closed form (k-f)² (f+1) (f(f+2) + 3(k+1)²) / 12 of the same sum.
BigInt floor_contribution_closed(std::size_t f, std::size_t k);

LambdaCoeffs lambda_coeffs(std::size_t k);

/// a_T(◊ × C_k) for T ∈ {∅, {⊥}, {⊥,ℓ}, {⊥,ℓ,r}, ◊}; a_{⊥,r} = a_{⊥,ℓ}.
struct DiamondCoeffs {
  BigInt a_empty;
  BigInt a_bot;
  BigInt a_botl;
  BigInt a_botlr;
  BigInt a_diamond;
  BigInt h;
};

DiamondCoeffs diamond_coeffs(std::size_t k);

// ---------------------------------------------------------------------------
// H(C2, C_k)
// ---------------------------------------------------------------------------

/// a_j(k) for j = 0..k, T_j = C_j × {k} on the top diagonal of H(C2, C_k).
std::vector<BigInt> hc2ck_coeffs(std::size_t k);
BigInt h_hc2ck(std::size_t k);

/// Integer polynomial, constant term first.
struct QPolynomial {
  std::size_t k = 0;
  std::size_t j = 0;
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigInt operator()(const BigInt& x) const;
  std::string to_string() const;
};

/// q_j^(k):  q_0^(1) = 1, q_1^(1) = x;  for k ≥ 2
///   q_j^(k) = Σ_{i=j-1}^{k-1} q_i^(k-1)  (1 ≤ j ≤ k-1),  q_0^(k) = q_1^(k),  q_k^(k) = x^k.
QPolynomial q_poly(std::size_t k, std::size_t j);
/// q_0^(k) .. q_k^(k).
std::vector<QPolynomial> q_row(std::size_t k);

/// Path counts in the grid graph G on vertices (k, j), 0 ≤ j ≤ k.  Edges:
///   (k-1, l) -> (k, l+1)   for l ≤ k-2        (diagonal step)
///   (k-1, k-1) -> (k, k-1)                     (leaving the diagonal)
///   (k, l+1) -> (k, l)     for l+1 ≤ k-1      (downward step)
/// The diagonal vertices (i, i) are the path sources; the second edge is the
/// diagonal step into (k, k) fused with the downward step that must follow,
/// so no path passes through a diagonal vertex other than its start.
class GridPathCounter {
 public:
  explicit GridPathCounter(std::size_t k_max);

  /// Number of paths from (i, i) to (k, j).
  const BigInt& paths(std::size_t k, std::size_t j, std::size_t i) const;
  std::size_t k_max() const { return k_max_; }

 private:
  std::size_t k_max_;
  // table_[k][j][i]
  std::vector<std::vector<std::vector<BigInt>>> table_;
};

BigInt path_count(std::size_t k, std::size_t j, std::size_t i);

/// C(k+i, k) - C(k+i, k+1).
BigInt closed_coeff(std::size_t k, std::size_t i);
/// Σ_{i=0}^{k} closed_coeff(k, i) 2^{k-i}.
BigInt h_closed(std::size_t k);

}  // namespace ordhom
