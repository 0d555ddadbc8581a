#include "ordhom/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ordhom/gvs.hpp"

namespace ordhom {

// ---------------------------------------------------------------------------
// W × C_k
// ---------------------------------------------------------------------------

ProductChainEngine::ProductChainEngine(Poset w) : w_(std::move(w)) {}

const std::vector<ElementSet>& ProductChainEngine::downsets(const ElementSet& upset) {
  auto it = downsets_.find(upset);
  if (it != downsets_.end()) return it->second;
  auto sub = induced(w_, upset);
  std::vector<ElementSet> lifted;
  for (const auto& d : enumerate_downsets(sub.poset)) lifted.push_back(sub.lift(d));
  return downsets_.emplace(upset, std::move(lifted)).first->second;
}

const Coefficients& ProductChainEngine::coefficients(const ElementSet& upset, std::size_t k) {
  if (k == 0) throw std::invalid_argument("coefficients need k >= 1");
  if (!is_upset(w_, upset)) throw std::invalid_argument("engine key is not an up-set of W");
  auto key = std::make_pair(upset, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // std::map keeps references valid across the recursive insertions below.
  const auto& ds = downsets(upset);
  Coefficients out;
  if (k == 1) {
    for (const auto& t : ds) {
      std::uint64_t c = 0;
      for (const auto& e : ds)
        if (e.is_subset_of(t)) ++c;
      out.emplace(t, c);
    }
  } else {
    const auto& prev = coefficients(upset, k - 1);
    const auto mins = minimal_points(w_, upset);
    for (const auto& t : ds) {
      BigInt a = 0;
      for (const auto& u : ds)
        if (t.is_subset_of(u)) a += prev.at(u);

      const auto m = (mins & t).members();
      if (m.size() > kMaxInclusionExclusionPoints)
        throw std::invalid_argument("too many minimal points for inclusion-exclusion");
      const std::uint64_t subsets = std::uint64_t{1} << m.size();
      for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        ElementSet n;
        for (std::size_t i = 0; i < m.size(); ++i)
          if (mask >> i & 1U) n.set(m[i]);
        const auto& sub = coefficients(upset - n, k);
        if (n.count() % 2 == 1)
          a += sub.at(t - n);
        else
          a -= sub.at(t - n);
      }
      out.emplace(t, std::move(a));
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

BigInt ProductChainEngine::h(const ElementSet& upset, std::size_t k) {
  if (k == 0) return 1;
  BigInt total = 0;
  for (const auto& [t, a] : coefficients(upset, k)) total += a;
  return total;
}

BigInt ProductChainEngine::downset_count(const ElementSet& upset, std::size_t k) {
  if (k == 0) return 1;
  return coefficients(upset, k).at(upset);
}

std::vector<ElementSet> ProductChainEngine::memoized_upsets() const {
  std::vector<ElementSet> out;
  for (const auto& [key, _] : memo_)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt CoefficientTable::total() const {
  BigInt t = 0;
  for (const auto& [_, a] : entries) t += a;
  return t;
}

CoefficientTable a_table(const Poset& w, std::size_t k) {
  if (k == 0) throw std::invalid_argument("a_table needs k >= 1");
  ProductChainEngine engine(w);
  CoefficientTable table{w.carrier(), k, {}};
  const auto& coeffs = engine.coefficients(w.carrier(), k);
  for (const auto& t : enumerate_downsets(w)) table.entries.emplace_back(t, coeffs.at(t));
  return table;
}

BigInt h_product_chain(const Poset& w, std::size_t k) {
  ProductChainEngine engine(w);
  return engine.h(k);
}

// ---------------------------------------------------------------------------
// C_n × C_k
// ---------------------------------------------------------------------------

ChainProductTable chain_product_table(std::size_t n_max, std::size_t k_max) {
  ChainProductTable t;
  t.a.assign(k_max + 1, std::vector<std::vector<BigInt>>(n_max + 1));
  t.h.assign(k_max + 1, std::vector<BigInt>(n_max + 1, BigInt(0)));
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      auto& a = t.a[k][n];
      a.assign(n + 1, BigInt(0));
      if (k == 1) {
        for (std::size_t j = 0; j <= n; ++j) a[j] = j + 1;
        t.h[k][n] = (n + 1) * (n + 2) / 2;
        continue;
      }
      const auto& below = t.a[k - 1][n];
      a[0] = t.h[k - 1][n];
      for (std::size_t j = 1; j <= n; ++j) {
        a[j] = t.a[k][n - 1][j - 1];
        for (std::size_t i = j; i <= n; ++i) a[j] += below[i];
      }
      if (n == 0) {
        t.h[k][n] = 1;
        continue;
      }
      BigInt h = t.h[k][n - 1];
      for (std::size_t i = 0; i <= n; ++i) h += (i + 1) * below[i];
      t.h[k][n] = std::move(h);
    }
  }
  return t;
}

BigInt a_cnck(std::size_t n, std::size_t k, std::size_t j) {
  if (k == 0 || j > n) throw std::invalid_argument("a_cnck needs k >= 1 and j <= n");
  return chain_product_table(n, k).a[k][n][j];
}

BigInt h_cnck(std::size_t n, std::size_t k) {
  if (k == 0) throw std::invalid_argument("h_cnck needs k >= 1");
  return chain_product_table(n, k).h[k][n];
}

// ---------------------------------------------------------------------------
// Λ × C_k and ◊ × C_k
// ---------------------------------------------------------------------------

BigInt floor_contribution(std::size_t f, std::size_t k) {
  BigInt sum = 0;
  if (f >= k) return sum;
  const auto side = k - f;
  for (std::size_t i = 1; i <= side; ++i)
    for (std::size_t j = 1; j <= side; ++j)
      for (std::size_t phi = 0; phi <= f; ++phi) sum += BigInt((i + phi) * (j + phi));
  return sum;
}

BigInt floor_contribution_closed(std::size_t f, std::size_t k) {
  if (f >= k) return 0;
  BigInt d = k - f;
  BigInt num = d * d * (f + 1) * (BigInt(f) * (f + 2) + 3 * BigInt(k + 1) * (k + 1));
  return num / 12;
}

LambdaCoeffs lambda_coeffs(std::size_t k) {
  if (k == 0) throw std::invalid_argument("lambda_coeffs needs k >= 1");
  LambdaCoeffs c;
  BigInt kk = k;
  c.a_top = (kk + 1) * (kk + 2) * (2 * kk + 3) / 6;
  c.a_lr = kk * (kk + 1) * (kk + 2) * (3 * kk + 5) / 12;
  c.a_empty = 0;
  for (std::size_t f = 0; f <= k; ++f) c.a_empty += floor_contribution(f, k);
  c.h = 0;
  for (std::size_t f = 0; f <= k + 1; ++f) c.h += floor_contribution(f, k + 1);
  c.a_l = (c.h - c.a_top - c.a_lr - c.a_empty) / 2;
  return c;
}

DiamondCoeffs diamond_coeffs(std::size_t k) {
  if (k == 0) throw std::invalid_argument("diamond_coeffs needs k >= 1");
  // Lattice of ◊ itself: ∅ ⊂ {⊥} ⊂ {⊥,ℓ}, {⊥,r} ⊂ {⊥,ℓ,r} ⊂ ◊.
  DiamondCoeffs c{1, 2, 3, 5, 6, 20};
  for (std::size_t level = 2; level <= k; ++level) {
    const auto lam = lambda_coeffs(level);
    DiamondCoeffs next;
    next.a_empty = c.h;
    // ◊ × C_k minus the bottom column is Λ × C_k; its a_∅ is h(Λ × C_{k-1}).
    next.a_bot = c.h - c.a_empty + lam.a_empty;
    next.a_botl = c.a_botl + c.a_botlr + c.a_diamond + lam.a_l;
    next.a_botlr = c.a_botlr + c.a_diamond + lam.a_lr;
    next.a_diamond = c.a_diamond + lam.a_top;
    next.h = next.a_empty + next.a_bot + 2 * next.a_botl + next.a_botlr + next.a_diamond;
    c = std::move(next);
  }
  return c;
}

// ---------------------------------------------------------------------------
// H(C2, C_k)
// ---------------------------------------------------------------------------

std::vector<BigInt> hc2ck_coeffs(std::size_t k) {
  if (k == 0) throw std::invalid_argument("hc2ck_coeffs needs k >= 1");
  std::vector<BigInt> a{1, 2};
  for (std::size_t level = 2; level <= k; ++level) {
    BigInt h_prev = 0;
    for (const auto& v : a) h_prev += v;
    std::vector<BigInt> next(level + 1, BigInt(0));
    for (std::size_t j = 1; j + 1 <= level; ++j)
      for (std::size_t i = j - 1; i <= level - 1; ++i) next[j] += a[i];
    next[0] = h_prev;
    next[level] = pow2(static_cast<std::uint32_t>(level));
    a = std::move(next);
  }
  return a;
}

BigInt h_hc2ck(std::size_t k) {
  if (k == 0) return 1;  // H(C2, C0) is the empty poset
  BigInt h = 0;
  for (const auto& v : hc2ck_coeffs(k)) h += v;
  return h;
}

BigInt QPolynomial::operator()(const BigInt& x) const {
  BigInt v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

std::string QPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = coeffs.size(); e-- > 0;) {
    if (coeffs[e] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (e == 0 || coeffs[e] != 1) os << coeffs[e];
    if (e >= 1) os << 'x';
    if (e >= 2) os << '^' << e;
  }
  if (first) os << '0';
  return os.str();
}

namespace {

void add_into(std::vector<BigInt>& acc, const std::vector<BigInt>& p) {
  if (acc.size() < p.size()) acc.resize(p.size(), BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i];
}

}  // namespace

std::vector<QPolynomial> q_row(std::size_t k) {
  if (k == 0) throw std::invalid_argument("q polynomials start at k = 1");
  std::vector<std::vector<BigInt>> row{{1}, {0, 1}};
  for (std::size_t level = 2; level <= k; ++level) {
    std::vector<std::vector<BigInt>> next(level + 1);
    for (std::size_t j = 1; j + 1 <= level; ++j)
      for (std::size_t i = j - 1; i <= level - 1; ++i) add_into(next[j], row[i]);
    next[0] = next[1];
    next[level].assign(level + 1, BigInt(0));
    next[level][level] = 1;
    row = std::move(next);
  }
  std::vector<QPolynomial> out;
  for (std::size_t j = 0; j <= k; ++j) {
    auto& c = row[j];
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    out.push_back({k, j, std::move(c)});
  }
  return out;
}

QPolynomial q_poly(std::size_t k, std::size_t j) {
  if (j > k) throw std::invalid_argument("q_poly needs j <= k");
  return q_row(k)[j];
}

GridPathCounter::GridPathCounter(std::size_t k_max) : k_max_(k_max) {
  struct Vertex {
    std::size_t k, j;
  };
  // in_edges[k][j] lists the tails of the edges ending at (k, j).
  std::vector<std::vector<std::vector<Vertex>>> in_edges(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) in_edges[k].resize(k + 1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (std::size_t l = 0; l + 2 <= k; ++l) in_edges[k][l + 1].push_back({k - 1, l});
    in_edges[k][k - 1].push_back({k - 1, k - 1});
    for (std::size_t l = 0; l + 2 <= k; ++l) in_edges[k][l].push_back({k, l + 1});
  }

  table_.assign(k_max + 1, {});
  for (std::size_t k = 0; k <= k_max; ++k)
    table_[k].assign(k + 1, std::vector<BigInt>(k_max + 1, BigInt(0)));

  for (std::size_t start = 0; start <= k_max; ++start) {
    // Topological order: columns left to right, each column top to bottom.
    for (std::size_t k = start; k <= k_max; ++k) {
      for (std::size_t j = k + 1; j-- > 0;) {
        BigInt c = (k == start && j == start) ? 1 : 0;
        for (const auto& v : in_edges[k][j]) c += table_[v.k][v.j][start];
        table_[k][j][start] = c;
      }
    }
  }
}

const BigInt& GridPathCounter::paths(std::size_t k, std::size_t j, std::size_t i) const {
  if (k > k_max_ || j > k || i > k) throw std::out_of_range("grid path query outside the table");
  return table_[k][j][i];
}

BigInt path_count(std::size_t k, std::size_t j, std::size_t i) { return GridPathCounter(k).paths(k, j, i); }

BigInt closed_coeff(std::size_t k, std::size_t i) {
  const auto n = static_cast<std::uint32_t>(k + i);
  return binomial(n, static_cast<std::uint32_t>(k)) - binomial(n, static_cast<std::uint32_t>(k + 1));
}

BigInt h_closed(std::size_t k) {
  BigInt h = 0;
  for (std::size_t i = 0; i <= k; ++i) h += closed_coeff(k, i) * pow2(static_cast<std::uint32_t>(k - i));
  return h;
}

}  // namespace ordhom
