#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "naive.hpp"
#include "ordhom/corpus.hpp"
#include "ordhom/downsets.hpp"
#include "ordhom/errors.hpp"
#include "ordhom/oracle.hpp"
#include "ordhom/verify.hpp"

using namespace ordhom;

TEST_CASE("brute force examples") {
  const auto c3 = make_chain(3);
  const auto sq = brute_hom_count(product(c3, c3), c3);
  CHECK(sq.total == 175);
  CHECK(sq.surjective == 118);
  CHECK(brute_hom_count(make_antichain(2), c3).total == 9);
  const auto one = brute_hom_count(make_chain(1), c3);
  CHECK(one.total == 3);
  CHECK(one.surjective == 0);
  CHECK(one.by_image.size() == 3);
  CHECK(brute_hom_count(Poset{}, c3).total == 1);
  CHECK_THROWS_AS(brute_hom_count(make_antichain(12), c3, 1000), BoundExceeded);
}

TEST_CASE("brute force against exhaustive maps") {
  std::vector<Poset> targets{make_chain(2), make_chain(3), make_lambda(), make_diamond(), make_antichain(2)};
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& p : posets_up_to_iso(n))
      for (const auto& q : targets) {
        const auto got = brute_hom_count(p, q);
        CHECK(got.total == naive::hom_count(p, q));
        CHECK(got.surjective == naive::hom_count(p, q, true));
        BigInt sum = 0;
        for (const auto& [image, c] : got.by_image) sum += c;
        CHECK(sum == got.total);
      }
}

TEST_CASE("order polynomial via linear extensions") {
  for (std::size_t n = 0; n <= 6; ++n) CHECK(omega_by_linear_extensions(make_chain(n), 3) == (n + 1) * (n + 2) / 2);
  CHECK(descent_distribution(make_antichain(2)) == std::vector<BigInt>{1, 1});
  CHECK(omega_by_linear_extensions(make_antichain(2), 3) == 9);
  CHECK(omega_by_linear_extensions(make_lambda(), 3) == 14);
  const auto c3 = make_chain(3);
  CHECK(omega_by_linear_extensions(product(c3, c3), 3) == 175);

  // Ω_P(x) counts maps into C_x.
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& p : posets_up_to_iso(n))
      for (std::size_t x = 1; x <= 4; ++x) CHECK(omega_by_linear_extensions(p, x) == naive::hom_count(p, make_chain(x)));

  // Natural labeling is needed only up to the choice of linear extension.
  const auto d = dual(make_diamond());
  CHECK(omega_by_linear_extensions(d, 3) == 20);
}

TEST_CASE("descents sum to the number of linear extensions") {
  const auto w = descent_distribution(product(make_chain(3), make_chain(3)));
  BigInt total = 0;
  for (const auto& v : w) total += v;
  CHECK(total == 42);
  CHECK_THROWS_AS(descent_distribution(make_antichain(9), 1000), BoundExceeded);
}

TEST_CASE("product with C2") {
  CHECK(h_by_product_c2(Poset{}) == 1);
  CHECK(h_by_product_c2(make_diamond()) == 20);
  CHECK(h_by_product_c2(product(make_chain(3), make_chain(3))) == 175);
}

TEST_CASE("constrained counts") {
  const auto c3 = make_chain(3);
  const auto sq = product(c3, c3);
  CHECK(constrained_hom_count(sq, {{0, 1}, {4, 2}, {8, 3}}) == 64);
  CHECK(constrained_hom_count(sq, {}) == 175);
  CHECK(constrained_hom_count(sq, {{0, 3}, {8, 1}}) == 0);
  // every element fixed
  LevelAssignment mono, broken;
  for (std::size_t x = 0; x < 9; ++x) {
    mono[x] = static_cast<int>(x / 3 + 1);
    broken[x] = static_cast<int>(3 - x / 3);
  }
  CHECK(constrained_hom_count(sq, mono) == 1);
  CHECK(constrained_hom_count(sq, broken) == 0);
  CHECK_THROWS_AS(constrained_hom_count(sq, {{9, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(constrained_hom_count(sq, {{0, 4}}), std::invalid_argument);

  // Both code paths agree.
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const auto p = random_poset(7, rng);
    LevelAssignment fixed;
    for (std::size_t x = 0; x < 7; ++x)
      if (rng() % 3 == 0) fixed[x] = static_cast<int>(rng() % 3 + 1);
    CHECK(constrained_hom_count(p, fixed) == constrained_hom_count(p, fixed, 0));
  }
}

TEST_CASE("isomorphism-class corpus") {
  const std::vector<std::size_t> counts{1, 1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 0; n < counts.size(); ++n) {
    const auto corpus = posets_up_to_iso(n);
    CHECK(corpus.size() == counts[n]);
    for (const auto& p : corpus) {
      CHECK(!validate(p));
      CHECK(ids_form_linear_extension(p));
    }
  }
}

TEST_CASE("canonical codes ignore relabeling") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const auto p = random_poset(7, rng);
    std::vector<std::size_t> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto q = Poset::from_relation(7, [&](std::size_t x, std::size_t y) { return p.leq(perm[x], perm[y]); });
    CHECK(canonical_code(p) == canonical_code(q));
  }
  CHECK(canonical_code(make_lambda()) != canonical_code(dual(make_lambda())));
}

TEST_CASE("random posets are reproducible") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_poset(8, a);
    CHECK(p == random_poset(8, b));
    CHECK(!validate(p));
    CHECK(ids_form_linear_extension(p));
  }
}

TEST_CASE("small verification run") {
  VerifyOptions options;
  options.max_size = 4;
  options.samples = 10;
  const auto report = run_verification(options);
  CHECK(report.ok());
  CHECK(report.posets == 1 + 1 + 2 + 5 + 16 + 10);
}
