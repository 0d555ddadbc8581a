#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordhom/element_set.hpp"

namespace ordhom {

/// Finite poset on element ids 0..n-1 with a dense order relation.
///
/// Each element keeps its principal down-set and up-set as bitmasks, so
/// leq(x, y) is a single bit test.  Values are immutable after construction.
/// The raw-relation factory does not check the order axioms; run validate()
/// on anything that did not come from one of the constructors below.
class Poset {
 public:
  Poset() = default;

  /// Builds the relation {(x, y) : leq(x, y)} as given, without closure.
  static Poset from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
                             std::vector<std::string> labels = {});

  /// Reflexive-transitive closure of a cover list; throws PosetError on a cycle
  /// or an out-of-range id.  A pair (i, j) means i lies below j.
  static Poset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                           std::vector<std::string> labels = {});

  std::size_t size() const { return down_.size(); }
  bool empty() const { return down_.empty(); }

  bool leq(std::size_t x, std::size_t y) const { return down_[y].test(x); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  /// Principal down-set of x (contains x).
  const ElementSet& down(std::size_t x) const { return down_[x]; }
  /// Principal up-set of x (contains x).
  const ElementSet& up(std::size_t x) const { return up_[x]; }

  ElementSet carrier() const { return ElementSet::range(size()); }

  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Number of pairs (x, y) with x <= y, the diagonal included.
  std::size_t relation_size() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.down_ == b.down_; }

 private:
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<std::string> labels_;
};

/// Induced sub-poset together with the id map back into the parent.
struct SubPoset {
  Poset poset;
  std::vector<std::size_t> to_parent;

  ElementSet lift(const ElementSet& local) const;
  ElementSet restrict(const ElementSet& parent) const;
};

Poset make_chain(std::size_t k);
Poset make_antichain(std::size_t k);
/// Λ = A2 ⊕ A1: ids 0, 1 are the minimal points, 2 the top.
Poset make_lambda();
/// ◊ = C2 × C2: ids 0 (bottom), 1, 2 (middle), 3 (top).
Poset make_diamond();

/// Cartesian product with the component-wise order.  Element (p, q) gets id
/// p * |Q| + q (row-major, P-index major).
Poset product(const Poset& p, const Poset& q);
/// P-elements keep their ids, Q-element j becomes |P| + j.
Poset direct_sum(const Poset& p, const Poset& q);
/// As direct_sum, with every P-element below every Q-element.
Poset ordinal_sum(const Poset& p, const Poset& q);
Poset dual(const Poset& p);

SubPoset induced(const Poset& p, const ElementSet& subset);
/// P restricted to carrier ∖ ↓B.
SubPoset remove_down_closure(const Poset& p, const ElementSet& b);

ElementSet down_closure(const Poset& p, const ElementSet& b);
ElementSet up_closure(const Poset& p, const ElementSet& b);
ElementSet minimal_points(const Poset& p);
ElementSet maximal_points(const Poset& p);
/// Minimal points of the sub-poset induced on `subset`.
ElementSet minimal_points(const Poset& p, const ElementSet& subset);
bool is_downset(const Poset& p, const ElementSet& d);
bool is_upset(const Poset& p, const ElementSet& u);

/// All cover pairs (y, x): y is covered by x.
std::vector<std::pair<std::size_t, std::size_t>> covers(const Poset& p);

/// A linear extension: repeatedly the smallest id whose predecessors are placed.
/// Equals the identity order whenever ids already form a linear extension.
std::vector<std::size_t> linear_extension(const Poset& p);
bool ids_form_linear_extension(const Poset& p);

/// First violated order axiom, or nullopt when the relation is a partial order.
std::optional<std::string> validate(const Poset& p);

inline constexpr std::size_t kDefaultHomBound = 1'000'000;

/// Poset of all order homomorphisms P -> Q under the pointwise order.  Maps are
/// found by backtracking along a linear extension of P and numbered in
/// lexicographic order of their value tuples.  Throws BoundExceeded when
/// |Q|^|P| > bound.
Poset hom_poset(const Poset& p, const Poset& q, std::size_t bound = kDefaultHomBound);

}  // namespace ordhom
