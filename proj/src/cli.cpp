#include "ordhom/cli.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <sstream>

#include "ordhom/downsets.hpp"
#include "ordhom/errors.hpp"
#include "ordhom/expr.hpp"
#include "ordhom/families.hpp"
#include "ordhom/gvs.hpp"
#include "ordhom/oracle.hpp"

namespace ordhom::cli {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

BigInt h_with(const Poset& p, const std::string& method) {
  if (method == "summation") return h_by_summation(p);
  if (method == "brute") return brute_hom_count(p, make_chain(3)).total;
  if (method == "orderpoly") return omega_by_linear_extensions(p, 3);
  if (method == "prodc2") return h_by_product_c2(p);
  throw UsageError("unknown method '" + method + "'");
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

std::vector<BigInt> row(std::initializer_list<BigInt> values) { return values; }

Table cnck_table(const TableOptions& o) {
  Table t{"cnck", {"n", "k", "j", "a_j", "h"}, {}};
  if (o.k_max == 0) return t;
  const auto tab = chain_product_table(o.n_max, o.k_max);
  for (std::size_t k = 1; k <= o.k_max; ++k)
    for (std::size_t n = 0; n <= o.n_max; ++n)
      for (std::size_t j = 0; j <= n; ++j) t.rows.push_back(row({n, k, j, tab.a[k][n][j], tab.h[k][n]}));
  return t;
}

Table lambda_table(const TableOptions& o) {
  Table t{"lambda", {"k", "a_empty", "a_l", "a_r", "a_lr", "a_top", "h"}, {}};
  for (std::size_t k = 1; k <= o.k_max; ++k) {
    const auto c = lambda_coeffs(k);
    t.rows.push_back(row({k, c.a_empty, c.a_l, c.a_l, c.a_lr, c.a_top, c.h}));
  }
  return t;
}

Table diamond_table(const TableOptions& o) {
  Table t{"diamond", {"k", "a_empty", "a_bot", "a_botl", "a_botr", "a_botlr", "a_diamond", "h"}, {}};
  for (std::size_t k = 1; k <= o.k_max; ++k) {
    const auto c = diamond_coeffs(k);
    t.rows.push_back(row({k, c.a_empty, c.a_bot, c.a_botl, c.a_botl, c.a_botlr, c.a_diamond, c.h}));
  }
  return t;
}

Table hc2ck_table(const TableOptions& o) {
  Table t{"hc2ck", {"k", "j", "a_j", "h"}, {}};
  for (std::size_t k = 1; k <= o.k_max; ++k) {
    const auto a = hc2ck_coeffs(k);
    BigInt h = 0;
    for (const auto& v : a) h += v;
    for (std::size_t j = 0; j < a.size(); ++j) t.rows.push_back(row({k, j, a[j], h}));
  }
  return t;
}

// Coefficient of x^(k-i) in q_0^(k+1), i.e. the weight of 2^(k-i) in h(H(C2, C_k)).
Table polycoeffs_table(const TableOptions& o) {
  Table t{"polycoeffs", {"k", "i", "coeff"}, {}};
  for (std::size_t k = 0; k <= o.k_max; ++k)
    for (std::size_t i = 0; i <= k; ++i) t.rows.push_back(row({k, i, closed_coeff(k, i)}));
  return t;
}

// Every up-set of C3 × C3 that the engine visits, with h and #D of W' × C_k.
Table c3c3grid_table(const TableOptions& o) {
  Table t{"c3c3grid", {"upset_mask", "size", "k", "h", "downsets"}, {}};
  ProductChainEngine engine(product(make_chain(3), make_chain(3)));
  for (std::size_t k = 1; k <= o.k_max; ++k) engine.h(k);
  for (const auto& u : engine.memoized_upsets())
    for (std::size_t k = 1; k <= o.k_max; ++k)
      t.rows.push_back(row({BigInt(u.word(0)), u.count(), k, engine.h(u, k), engine.downset_count(u, k)}));
  return t;
}

}  // namespace

HResult cmd_h(const std::string& expr, const std::string& method) {
  if (std::find(kHMethods.begin(), kHMethods.end(), method) == kHMethods.end())
    throw UsageError("unknown method '" + method + "'; choose one of " + join(kHMethods, ", "));
  const auto e = parse_expr(expr);
  const auto shape = engine_shape(e);

  if (method == "engine") {
    if (!shape)
      throw UsageError("engine needs an expression of the form W*C<k>; applicable here: summation, brute, orderpoly, prodc2");
    return {h_product_chain(shape->w, shape->k), "engine"};
  }
  if (method != "auto") return {h_with(evaluate(e), method), method};

  if (shape) return {h_product_chain(shape->w, shape->k), "engine"};
  const auto p = evaluate(e);
  try {
    return {h_by_summation(p), "summation"};
  } catch (const BoundExceeded&) {
    return {brute_hom_count(p, make_chain(3)).total, "brute"};
  }
}

Table make_table(const TableOptions& o) {
  if (o.family == "cnck") return cnck_table(o);
  if (o.family == "lambda") return lambda_table(o);
  if (o.family == "diamond") return diamond_table(o);
  if (o.family == "hc2ck") return hc2ck_table(o);
  if (o.family == "polycoeffs") return polycoeffs_table(o);
  if (o.family == "c3c3grid") return c3c3grid_table(o);
  throw UsageError("unknown family '" + o.family + "'; choose one of " + join(kTableFamilies, ", "));
}

std::string render(const Table& table, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << join(table.columns, ",") << '\n';
    for (const auto& r : table.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << '\n';
    }
  } else if (format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = table.family;
    doc["columns"] = table.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
      auto cells = nlohmann::ordered_json::array();
      for (const auto& v : r) cells.push_back(to_string(v));
      doc["rows"].push_back(std::move(cells));
    }
    os << doc.dump(2) << '\n';
  } else if (format == "text") {
    std::vector<std::size_t> width(table.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
    for (const auto& r : table.rows) {
      auto& line = cells.emplace_back();
      for (std::size_t i = 0; i < r.size(); ++i) {
        line.push_back(to_string(r[i]));
        width[i] = std::max(width[i], line.back().size());
      }
    }
    auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t i = 0; i < line.size(); ++i)
        os << (i ? "  " : "") << std::string(width[i] - line[i].size(), ' ') << line[i];
      os << '\n';
    };
    emit(table.columns);
    for (const auto& line : cells) emit(line);
  } else {
    throw UsageError("unknown format '" + format + "'; choose one of " + join(kTableFormats, ", "));
  }
  return os.str();
}

BigInt cmd_surjective(const std::string& expr) { return surjective_count(evaluate(expr)); }

BigInt cmd_constrained(const std::string& expr, const std::vector<std::string>& assignments) {
  const auto p = evaluate(expr);
  LevelAssignment fixed;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("expected id=level, got '" + a + "'");
    const auto id = parse_size(a.substr(0, eq), "element id");
    const auto level = parse_size(a.substr(eq + 1), "level");
    if (id >= p.size()) throw UsageError("element id " + std::to_string(id) + " out of range");
    if (level < 1 || level > 3) throw UsageError("level must be 1, 2 or 3");
    if (auto it = fixed.find(id); it != fixed.end() && it->second != static_cast<int>(level))
      return 0;
    fixed[id] = static_cast<int>(level);
  }
  return constrained_hom_count(p, fixed);
}

std::string element_map(const Poset& p) {
  std::ostringstream os;
  for (std::size_t x = 0; x < p.size(); ++x) os << x << ' ' << p.label(x) << '\n';
  return os.str();
}

std::string cmd_downsets(const std::string& expr, bool list) {
  const auto p = evaluate(expr);
  const auto lattice = enumerate_downsets(p);
  if (!list) return std::to_string(lattice.size()) + '\n';
  std::ostringstream os;
  for (const auto& d : lattice) {
    std::vector<std::string> names;
    d.for_each([&](std::size_t x) { names.push_back(p.label(x)); });
    os << '{' << join(names, ",") << "}\n";
  }
  return os.str();
}

BigInt cmd_omega(const std::string& expr, std::size_t x) {
  if (x == 0) throw UsageError("x must be positive");
  return omega_by_linear_extensions(evaluate(expr), x);
}

VerifyReport cmd_verify(const VerifyOptions& options, std::ostream* progress) {
  if (options.sample_min > options.sample_max) throw UsageError("sample size range is empty");
  return run_verification(options, progress);
}

}  // namespace ordhom::cli
