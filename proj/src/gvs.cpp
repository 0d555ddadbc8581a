#include "ordhom/gvs.hpp"

#include <stdexcept>
#include <unordered_set>

namespace ordhom {

namespace {

// Down-sets of R|S lifted to R's ids, in the lattice order of R|S.
std::vector<ElementSet> downsets_of(const Poset& r, const ElementSet& s) {
  auto sub = induced(r, s);
  std::vector<ElementSet> out;
  for (const auto& d : enumerate_downsets(sub.poset)) out.push_back(sub.lift(d));
  return out;
}

bool is_downset_within(const Poset& r, const ElementSet& within, const ElementSet& d) {
  if (!d.is_subset_of(within)) return false;
  bool ok = true;
  d.for_each([&](std::size_t i) { ok = ok && (r.down(i) & within).is_subset_of(d); });
  return ok;
}

bool is_upset_within(const Poset& r, const ElementSet& within, const ElementSet& u) {
  if (!u.is_subset_of(within)) return false;
  bool ok = true;
  u.for_each([&](std::size_t i) { ok = ok && (r.up(i) & within).is_subset_of(u); });
  return ok;
}

std::string show(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  });
  return out + "}";
}

// Bijection plus two-way inclusion check for f: source -> target.
template <typename F>
IsoCheck check_order_iso(const std::vector<ElementSet>& source, const std::vector<ElementSet>& target, F f,
                         const char* name) {
  std::unordered_set<ElementSet> target_set(target.begin(), target.end());
  std::vector<ElementSet> image;
  std::unordered_set<ElementSet> seen;
  for (const auto& d : source) {
    auto img = f(d);
    if (!target_set.count(img))
      return {false, std::string(name) + ": image " + show(img) + " of " + show(d) + " is outside the target"};
    if (!seen.insert(img).second)
      return {false, std::string(name) + ": " + show(img) + " is hit twice"};
    image.push_back(img);
  }
  if (image.size() != target.size())
    return {false, std::string(name) + ": image has " + std::to_string(image.size()) + " sets, target has " +
                       std::to_string(target.size())};
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j)
      if (source[i].is_subset_of(source[j]) != image[i].is_subset_of(image[j]))
        return {false, std::string(name) + ": inclusion differs for " + show(source[i]) + ", " + show(source[j])};
  return {};
}

void require_in_sigma_domain(const GvsDecomposition& g, const ElementSet& t) {
  if (!g.sigma.count(t)) throw std::invalid_argument("T is not a down-set of S+");
}

}  // namespace

GvsDecomposition make_decomposition(Poset r, const ElementSet& y, const ElementSet& b_minus,
                                    const ElementSet& b_plus, std::map<ElementSet, ElementSet> sigma) {
  GvsDecomposition g;
  g.x = r.carrier() - y;
  g.y = y & r.carrier();
  g.r = std::move(r);
  g.b_minus = b_minus;
  g.b_plus = b_plus;
  g.sigma = std::move(sigma);
  return g;
}

GvsDecomposition build_schematic(const Poset& r, const ElementSet& u, const ElementSet& b_plus) {
  if (u.empty() || u == r.carrier()) throw std::invalid_argument("U must be a nonempty proper subset");
  if (!is_upset(r, u)) throw std::invalid_argument("U is not an up-set");
  if (b_plus.empty() || !is_downset_within(r, u, b_plus))
    throw std::invalid_argument("B+ is not a nonempty down-set of R|U");

  const auto x = r.carrier() - u;
  ElementSet generators;
  for (auto [lo, hi] : covers(r))
    if (x.test(lo) && b_plus.test(hi)) generators.set(lo);
  const auto b_minus = up_closure(r, generators) & x;

  std::map<ElementSet, ElementSet> sigma;
  for (const auto& t : downsets_of(r, b_plus)) sigma.emplace(t, b_minus & down_closure(r, t));
  return make_decomposition(r, u, b_minus, b_plus, std::move(sigma));
}

GvsDecomposition product_chain_frame(const Poset& w, std::size_t k) {
  if (k < 2) throw std::invalid_argument("product_chain_frame needs k >= 2");
  const auto r = product(w, make_chain(k));
  const auto level = [&](std::size_t lvl) {
    ElementSet s;
    for (std::size_t i = 0; i < w.size(); ++i) s.set(i * k + lvl);
    return s;
  };
  const auto top = level(k - 1);
  std::map<ElementSet, ElementSet> sigma;
  for (const auto& t : downsets_of(r, top)) {
    ElementSet shifted;
    t.for_each([&](std::size_t id) { shifted.set(id - 1); });
    sigma.emplace(t, shifted);
  }
  return make_decomposition(r, top, level(k - 2), top, std::move(sigma));
}

std::optional<std::string> validate_gvs(const GvsDecomposition& g) {
  const auto& r = g.r;
  if (g.x.intersects(g.y) || (g.x | g.y) != r.carrier()) return "X and Y do not partition the carrier";
  std::optional<std::string> bad;
  g.y.for_each([&](std::size_t yy) {
    if (!bad && r.up(yy).intersects(g.x))
      bad = "element " + std::to_string(yy) + " of Y lies below an element of X";
  });
  if (bad) return bad;
  if (!is_upset_within(r, g.x, g.b_minus)) return "B- is not an up-set of P";
  if (!is_downset_within(r, g.y, g.b_plus)) return "B+ is not a down-set of Q";

  const auto domain = downsets_of(r, g.b_plus);
  if (domain.size() != g.sigma.size()) return "sigma is not defined on exactly D(S+)";
  for (const auto& t : domain) {
    auto it = g.sigma.find(t);
    if (it == g.sigma.end()) return "sigma undefined at " + show(t);
    const auto& s = it->second;
    if (!s.is_subset_of(g.b_minus)) return "sigma(" + show(t) + ") = " + show(s) + " is not inside B-";
    const auto lower_of_t = g.x & down_closure(r, t);
    if (!s.is_subset_of(lower_of_t))
      return "first inclusion fails at T = " + show(t) + ": sigma(T) = " + show(s) + " not inside X ∩ ↓T = " +
             show(lower_of_t);
    if (!lower_of_t.is_subset_of(down_closure(r, s)))
      return "second inclusion fails at T = " + show(t) + ": X ∩ ↓T = " + show(lower_of_t) +
             " not inside ↓sigma(T) = " + show(down_closure(r, s));
  }
  return std::nullopt;
}

BigInt a_coeff_direct(const GvsDecomposition& g, const ElementSet& t) {
  if (!is_downset_within(g.r, g.y, t)) throw std::invalid_argument("T is not a down-set of Q");
  auto lattice = enumerate_downsets(g.r);
  auto counts = lattice.e_counts();
  BigInt a = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if ((lattice[i] & g.y) == t) a += counts[i];
  return a;
}

IsoCheck check_tau_iso(const GvsDecomposition& g, const ElementSet& t) {
  require_in_sigma_domain(g, t);
  const auto& sig = g.sigma.at(t);
  std::vector<ElementSet> source, target;
  for (const auto& d : enumerate_downsets(g.r)) {
    if ((d & g.y) == t) source.push_back(d);
    if (d.is_subset_of(g.x) && sig.is_subset_of(d)) target.push_back(d);
  }
  return check_order_iso(source, target, [&](const ElementSet& d) { return d - t; }, "tau");
}

IsoCheck check_beta_iso(const GvsDecomposition& g, const ElementSet& n) {
  if (!is_downset_within(g.r, g.y, n)) throw std::invalid_argument("N is not a down-set of Q");
  const auto removed = down_closure(g.r, n);
  std::vector<ElementSet> source;
  for (const auto& d : enumerate_downsets(g.r))
    if (n.is_subset_of(d)) source.push_back(d);
  const auto target = downsets_of(g.r, g.r.carrier() - removed);
  return check_order_iso(source, target, [&](const ElementSet& d) { return d - removed; }, "beta");
}

IsoCheck check_upper_truncation(const GvsDecomposition& g, const ElementSet& y_prime) {
  if (!is_downset_within(g.r, g.y, y_prime)) throw std::invalid_argument("Y' is not a down-set of Q");
  auto full = a_coefficients(g.r, g.y);
  auto sub = induced(g.r, g.x | y_prime);
  auto truncated = a_coefficients(sub.poset, sub.restrict(y_prime));
  for (const auto& [t_local, value] : truncated) {
    auto t = sub.lift(t_local);
    auto it = full.find(t);
    if (it == full.end()) return {false, "T = " + show(t) + " missing from D(Q)"};
    if (it->second != value)
      return {false, "a_T differs at T = " + show(t) + ": " + value.str() + " vs " + it->second.str()};
  }
  return {};
}

const Coefficients& DirectCoefficients::table(const ElementSet& carrier, const ElementSet& upper) {
  auto key = std::make_pair(carrier, upper);
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;
  auto sub = induced(r_, carrier);
  Coefficients lifted;
  for (auto& [t, v] : a_coefficients(sub.poset, sub.restrict(upper))) lifted.emplace(sub.lift(t), std::move(v));
  return tables_.emplace(key, std::move(lifted)).first->second;
}

BigInt DirectCoefficients::a(const ElementSet& carrier, const ElementSet& upper, const ElementSet& t) {
  const auto& tab = table(carrier, upper);
  auto it = tab.find(t);
  if (it == tab.end()) throw std::invalid_argument("requested T is not a down-set of the upper part");
  return it->second;
}

BigInt DirectCoefficients::h(const ElementSet& carrier) {
  auto it = h_.find(carrier);
  if (it != h_.end()) return it->second;
  auto value = h_by_summation(induced(r_, carrier).poset);
  h_.emplace(carrier, value);
  return value;
}

BigInt a_coeff_theorem2(const GvsDecomposition& g, const ElementSet& t, const CoefficientProvider& oracle) {
  require_in_sigma_domain(g, t);
  const auto& sig = g.sigma.at(t);

  BigInt a = 0;
  for (const auto& u : downsets_of(g.r, g.b_minus))
    if (sig.is_subset_of(u)) a += oracle(g.x, g.b_minus, u);

  const auto m = (minimal_points(g.r, g.y) & t).members();
  if (m.size() > kMaxInclusionExclusionPoints)
    throw std::invalid_argument("too many minimal points in T for inclusion-exclusion");
  const auto p_plus = g.x | g.b_plus;
  const std::uint64_t subsets = std::uint64_t{1} << m.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    ElementSet n;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (mask >> i & 1U) n.set(m[i]);
    auto term = oracle(p_plus - down_closure(g.r, n), g.b_plus - n, t - n);
    if (n.count() % 2 == 1)
      a += term;
    else
      a -= term;
  }
  return a;
}

BigInt h_via_corollary(const GvsDecomposition& g, const CoefficientProvider& oracle, const HProvider& h_oracle) {
  const auto q_min = minimal_points(g.r, g.y);
  if (q_min.count() != 1) throw std::invalid_argument("Q has no minimum point");
  const auto bottom = q_min.members().front();
  if (!g.y.is_subset_of(g.r.up(bottom))) throw std::invalid_argument("Q has no minimum point");

  const auto s_minus = downsets_of(g.r, g.b_minus);
  std::vector<ElementSet> plus_domain;
  for (const auto& entry : g.sigma) plus_domain.push_back(entry.first);
  auto iso = check_order_iso(plus_domain, s_minus,
                             [&](const ElementSet& t) { return g.sigma.at(t); }, "sigma");
  if (!iso) throw std::invalid_argument("sigma is not an isomorphism D(S+) -> D(S-): " + iso.detail);

  ElementSet bot;
  bot.set(bottom);
  BigInt h = h_oracle((g.x | g.b_plus) - down_closure(g.r, bot));

  for (const auto& d : downsets_of(g.r, g.y))
    if (!g.sigma.count(d)) h += oracle(g.r.carrier(), g.y, d);

  for (const auto& t : s_minus) {
    std::uint64_t below = 0;
    for (const auto& e : s_minus)
      if (e.is_subset_of(t)) ++below;
    h += below * oracle(g.x, g.b_minus, t);
  }
  return h;
}

BigInt surjective_count(const BigInt& h, const BigInt& num_downsets, bool empty_poset) {
  if (empty_poset) return 0;
  return h - 3 * num_downsets + 3;
}

BigInt surjective_count(const Poset& p) {
  auto lattice = enumerate_downsets(p);
  return surjective_count(h_by_summation(lattice), lattice.size(), p.empty());
}

}  // namespace ordhom
