#include "ordhom/verify.hpp"

#include <random>
#include <sstream>

#include "ordhom/corpus.hpp"
#include "ordhom/downsets.hpp"
#include "ordhom/families.hpp"
#include "ordhom/gvs.hpp"
#include "ordhom/oracle.hpp"

namespace ordhom {

namespace {

std::string describe(const Poset& p) {
  std::ostringstream os;
  os << p.size() << " elements, covers";
  for (const auto& [a, b] : covers(p)) os << " " << a << "<" << b;
  return os.str();
}

struct Checker {
  VerifyReport& report;
  const std::string& name;
  const Poset& p;

  void expect(bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.failures.push_back(name + ": " + what + " [" + describe(p) + "]");
  }
  void expect_equal(const BigInt& a, const BigInt& b, const std::string& what) {
    expect(a == b, what + " (" + to_string(a) + " vs " + to_string(b) + ")");
  }
};

}  // namespace

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << posets << " posets, " << checks << " checks, " << failures.size() << " failures";
  return os.str();
}

void verify_counts(const Poset& p, const std::string& name, VerifyReport& report) {
  Checker c{report, name, p};
  const auto lattice = enumerate_downsets(p);
  const BigInt num_d = lattice.size();

  const auto brute3 = brute_hom_count(p, make_chain(3));
  const auto summation = h_by_summation(lattice);
  c.expect_equal(brute3.total, summation, "brute vs summation");
  c.expect_equal(omega_by_linear_extensions(p, 3), summation, "order polynomial vs summation");
  c.expect_equal(h_by_product_c2(p), summation, "product with C2 vs summation");
  c.expect_equal(h_product_chain(p, 1), summation, "engine level 1 vs summation");
  c.expect_equal(h_product_chain(p, 2), h_by_summation(product(p, make_chain(2))), "engine level 2");

  BigInt by_image = 0;
  for (const auto& [image, count] : brute3.by_image) by_image += count;
  c.expect_equal(by_image, brute3.total, "image tally sums to total");

  c.expect_equal(brute_hom_count(p, make_chain(2)).total, num_d, "maps to C2 vs #D");
  c.expect_equal(brute3.surjective, surjective_count(summation, num_d, p.empty()), "surjective formula");
  c.expect_equal(h_by_summation(dual(p)), summation, "h invariant under duality");
}

void verify_decompositions(const Poset& r, const std::string& name, VerifyReport& report) {
  Checker c{report, name, r};
  const auto lattice = enumerate_downsets(r);
  const auto h = h_by_summation(lattice);
  const auto full = r.carrier();
  DirectCoefficients direct(r);

  for (const auto& d : lattice) {
    const auto u = full - d;
    if (u.empty() || d.empty()) continue;
    const auto q = induced(r, u);

    BigInt partition = 0;
    for (const auto& [t, a] : a_coefficients(r, u)) partition += a;
    c.expect_equal(partition, h, "sum of a_T equals h");

    std::vector<ElementSet> q_downsets;
    for (const auto& local : enumerate_downsets(q.poset)) q_downsets.push_back(q.lift(local));

    bool first = true;
    for (const auto& b_plus : q_downsets) {
      if (b_plus.empty()) continue;
      const auto g = build_schematic(r, u, b_plus);
      const auto problem = validate_gvs(g);
      c.expect(!problem, "invalid decomposition: " + problem.value_or(""));
      if (problem) continue;

      for (const auto& [t, s] : g.sigma) {
        c.expect_equal(a_coeff_theorem2(g, t, direct.provider()), direct.a(full, u, t), "recursion vs definition");
        const auto tau = check_tau_iso(g, t);
        c.expect(tau.ok, "tau bijection: " + tau.detail);
      }

      // Checks that depend on Q alone run once per U.
      if (first) {
        first = false;
        for (const auto& n : q_downsets) {
          const auto beta = check_beta_iso(g, n);
          c.expect(beta.ok, "beta bijection: " + beta.detail);
          const auto trunc = check_upper_truncation(g, n);
          c.expect(trunc.ok, "upper truncation: " + trunc.detail);
        }
      }

      try {
        c.expect_equal(h_via_corollary(g, direct.provider(), direct.h_provider()), h, "corollary vs h");
      } catch (const std::invalid_argument&) {
        // preconditions not met for this decomposition
      }
    }
  }
}

VerifyReport run_verification(const VerifyOptions& options, std::ostream* progress) {
  VerifyReport report;
  for (std::size_t n = 0; n <= options.max_size; ++n) {
    const auto corpus = posets_up_to_iso(n);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto name = "iso class " + std::to_string(i) + " on " + std::to_string(n);
      verify_counts(corpus[i], name, report);
      verify_decompositions(corpus[i], name, report);
      ++report.posets;
    }
    if (progress) *progress << "size " << n << ": " << corpus.size() << " posets\n";
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> size(options.sample_min, options.sample_max);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const auto p = random_poset(size(rng), rng);
    const auto name = "sample " + std::to_string(s);
    verify_counts(p, name, report);
    verify_decompositions(p, name, report);
    ++report.posets;
  }
  if (progress) *progress << options.samples << " random samples\n";
  return report;
}

}  // namespace ordhom
