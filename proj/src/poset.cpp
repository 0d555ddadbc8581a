#include "ordhom/poset.hpp"

#include <algorithm>
#include <sstream>

#include "ordhom/errors.hpp"

namespace ordhom {

namespace {

void check_capacity(std::size_t n) {
  if (n > ElementSet::kCapacity)
    throw BoundExceeded("poset with " + std::to_string(n) + " elements exceeds the capacity of " +
                        std::to_string(ElementSet::kCapacity));
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// "(1,2)" -> "1,2" so that nested products print as flat tuples.
std::string tuple_body(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

Poset Poset::from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
                           std::vector<std::string> labels) {
  check_capacity(n);
  Poset p;
  p.down_.assign(n, ElementSet{});
  p.up_.assign(n, ElementSet{});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq(x, y)) {
        p.down_[y].set(x);
        p.up_[x].set(y);
      }
  p.labels_ = labels.size() == n ? std::move(labels) : default_labels(n);
  return p;
}

Poset Poset::from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& cover_list,
                         std::vector<std::string> labels) {
  check_capacity(n);
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [lo, hi] : cover_list) {
    if (lo >= n || hi >= n)
      throw PosetError("cover pair (" + std::to_string(lo) + ", " + std::to_string(hi) + ") out of range");
    if (lo == hi) throw PosetError("cycle: element " + std::to_string(lo) + " covers itself");
    succ[lo].push_back(hi);
    ++indeg[hi];
  }
  // Kahn's algorithm; leftover elements sit on a cycle.
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    auto x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (auto y : succ[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  if (order.size() != n) throw PosetError("cover relation contains a cycle");

  // Topological order: down[x] is complete before x pushes it upward.
  std::vector<ElementSet> down(n);
  for (auto x : order) {
    down[x].set(x);
    for (auto y : succ[x]) down[y] |= down[x];
  }
  return from_relation(n, [&](std::size_t x, std::size_t y) { return down[y].test(x); }, std::move(labels));
}

std::size_t Poset::relation_size() const {
  std::size_t c = 0;
  for (const auto& d : down_) c += d.count();
  return c;
}

ElementSet SubPoset::lift(const ElementSet& local) const {
  ElementSet out;
  local.for_each([&](std::size_t i) { out.set(to_parent[i]); });
  return out;
}

ElementSet SubPoset::restrict(const ElementSet& parent) const {
  ElementSet out;
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    if (parent.test(to_parent[i])) out.set(i);
  return out;
}

Poset make_chain(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  return Poset::from_relation(k, [](std::size_t x, std::size_t y) { return x <= y; }, std::move(labels));
}

Poset make_antichain(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("a" + std::to_string(i));
  return Poset::from_relation(k, [](std::size_t x, std::size_t y) { return x == y; }, std::move(labels));
}

Poset make_lambda() {
  return Poset::from_covers(3, {{0, 2}, {1, 2}}, {"l", "r", "t"});
}

Poset make_diamond() { return product(make_chain(2), make_chain(2)); }

Poset product(const Poset& p, const Poset& q) {
  const auto m = q.size();
  const auto n = p.size() * m;
  check_capacity(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < m; ++b)
      labels.push_back("(" + tuple_body(p.label(a)) + "," + tuple_body(q.label(b)) + ")");
  return Poset::from_relation(
      n, [&](std::size_t x, std::size_t y) { return p.leq(x / m, y / m) && q.leq(x % m, y % m); },
      std::move(labels));
}

namespace {

Poset sum_impl(const Poset& p, const Poset& q, bool ordinal) {
  const auto np = p.size();
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  return Poset::from_relation(
      np + q.size(),
      [&](std::size_t x, std::size_t y) {
        if (x < np && y < np) return p.leq(x, y);
        if (x >= np && y >= np) return q.leq(x - np, y - np);
        return ordinal && x < np;
      },
      std::move(labels));
}

}  // namespace

Poset direct_sum(const Poset& p, const Poset& q) { return sum_impl(p, q, false); }
Poset ordinal_sum(const Poset& p, const Poset& q) { return sum_impl(p, q, true); }

Poset dual(const Poset& p) {
  return Poset::from_relation(p.size(), [&](std::size_t x, std::size_t y) { return p.leq(y, x); }, p.labels());
}

SubPoset induced(const Poset& p, const ElementSet& subset) {
  SubPoset s;
  subset.for_each([&](std::size_t i) {
    if (i < p.size()) s.to_parent.push_back(i);
  });
  std::vector<std::string> labels;
  for (auto i : s.to_parent) labels.push_back(p.label(i));
  s.poset = Poset::from_relation(
      s.to_parent.size(), [&](std::size_t x, std::size_t y) { return p.leq(s.to_parent[x], s.to_parent[y]); },
      std::move(labels));
  return s;
}

SubPoset remove_down_closure(const Poset& p, const ElementSet& b) {
  return induced(p, p.carrier() - down_closure(p, b));
}

ElementSet down_closure(const Poset& p, const ElementSet& b) {
  ElementSet out;
  b.for_each([&](std::size_t x) { out |= p.down(x); });
  return out;
}

ElementSet up_closure(const Poset& p, const ElementSet& b) {
  ElementSet out;
  b.for_each([&](std::size_t x) { out |= p.up(x); });
  return out;
}

ElementSet minimal_points(const Poset& p, const ElementSet& subset) {
  ElementSet out;
  subset.for_each([&](std::size_t x) {
    if ((p.down(x) & subset).count() == 1) out.set(x);
  });
  return out;
}

ElementSet minimal_points(const Poset& p) { return minimal_points(p, p.carrier()); }

ElementSet maximal_points(const Poset& p) {
  ElementSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.up(x).count() == 1) out.set(x);
  return out;
}

bool is_downset(const Poset& p, const ElementSet& d) {
  if (!d.is_subset_of(p.carrier())) return false;
  bool ok = true;
  d.for_each([&](std::size_t x) { ok = ok && p.down(x).is_subset_of(d); });
  return ok;
}

bool is_upset(const Poset& p, const ElementSet& u) {
  if (!u.is_subset_of(p.carrier())) return false;
  bool ok = true;
  u.for_each([&](std::size_t x) { ok = ok && p.up(x).is_subset_of(u); });
  return ok;
}

std::vector<std::pair<std::size_t, std::size_t>> covers(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    // y is covered by x iff y < x and no z with y < z < x.
    auto below = p.down(x);
    below.reset(x);
    below.for_each([&](std::size_t y) {
      auto between = below & p.up(y);
      between.reset(y);
      if (between.empty()) out.emplace_back(y, x);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> order;
  order.reserve(p.size());
  ElementSet placed;
  while (order.size() < p.size()) {
    bool progressed = false;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (placed.test(x)) continue;
      auto preds = p.down(x);
      preds.reset(x);
      if (preds.is_subset_of(placed)) {
        placed.set(x);
        order.push_back(x);
        progressed = true;
        break;
      }
    }
    if (!progressed) throw PosetError("relation is cyclic; no linear extension exists");
  }
  return order;
}

bool ids_form_linear_extension(const Poset& p) {
  for (std::size_t y = 0; y < p.size(); ++y)
    if (p.down(y).bound() > y + 1) return false;
  return true;
}

std::optional<std::string> validate(const Poset& p) {
  const auto n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!p.down(x).is_subset_of(p.carrier()))
      return "element " + std::to_string(x) + " relates to an id outside the carrier";
    if (!p.leq(x, x)) return "reflexivity violated at " + std::to_string(x);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (p.leq(x, y) && p.leq(y, x))
        return "antisymmetry violated: " + std::to_string(x) + " <= " + std::to_string(y) + " <= " +
               std::to_string(x);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (p.leq(y, z) && !p.leq(x, z))
          return "transitivity violated: " + std::to_string(x) + " <= " + std::to_string(y) + " <= " +
                 std::to_string(z) + " but not " + std::to_string(x) + " <= " + std::to_string(z);
    }
  return std::nullopt;
}

Poset hom_poset(const Poset& p, const Poset& q, std::size_t bound) {
  const auto n = p.size();
  const auto m = q.size();
  std::size_t space = 1;
  for (std::size_t i = 0; i < n && space != 0; ++i) {
    space *= m;
    if (space > bound)
      throw BoundExceeded("hom_poset search space |Q|^|P| exceeds the bound of " + std::to_string(bound));
  }

  const auto order = linear_extension(p);
  const auto qorder = linear_extension(q);
  std::vector<std::size_t> qrank(m);
  for (std::size_t i = 0; i < m; ++i) qrank[qorder[i]] = i;

  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> value(n, 0);
  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == n) {
      maps.push_back(value);
      return;
    }
    const auto x = order[pos];
    auto preds = p.down(x);
    preds.reset(x);
    for (std::size_t v = 0; v < m; ++v) {
      bool ok = true;
      preds.for_each([&](std::size_t y) { ok = ok && q.leq(value[y], v); });
      if (!ok) continue;
      value[x] = v;
      extend(pos + 1);
    }
  };
  extend(0);

  // Lexicographic order on Q-ranks is a linear extension of the pointwise order.
  std::sort(maps.begin(), maps.end(), [&](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](std::size_t u, std::size_t v) { return qrank[u] < qrank[v]; });
  });
  check_capacity(maps.size());

  std::vector<std::string> labels;
  for (const auto& f : maps) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << q.label(f[i]);
    os << ')';
    labels.push_back(os.str());
  }
  return Poset::from_relation(
      maps.size(),
      [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i)
          if (!q.leq(maps[a][i], maps[b][i])) return false;
        return true;
      },
      std::move(labels));
}

}  // namespace ordhom
