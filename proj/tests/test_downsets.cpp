#include <doctest.h>

#include <random>
#include <set>

#include "naive.hpp"
#include "ordhom/corpus.hpp"
#include "ordhom/downsets.hpp"
#include "ordhom/errors.hpp"

using namespace ordhom;

namespace {

std::vector<Poset> corpus_up_to(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t m = 0; m <= n; ++m)
    for (auto& p : posets_up_to_iso(m)) out.push_back(std::move(p));
  return out;
}

std::vector<Poset> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poset> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_poset(6 + i % 3, rng));
  return out;
}

}  // namespace

TEST_CASE("down-sets match subset filtering") {
  for (const auto& p : corpus_up_to(5)) {
    const auto lattice = enumerate_downsets(p);
    std::set<std::uint64_t> got;
    for (const auto& d : lattice) got.insert(d.word(0));
    const auto want = naive::downsets(p);
    CHECK(got == std::set<std::uint64_t>(want.begin(), want.end()));
    CHECK(lattice[0].empty());
    CHECK(lattice[lattice.size() - 1] == p.carrier());
  }
}

TEST_CASE("lattice ordering and lookup") {
  const auto lattice = enumerate_downsets(make_diamond());
  REQUIRE(lattice.size() == 6);
  for (std::size_t i = 0; i + 1 < lattice.size(); ++i) CHECK(BySizeThenValue{}(lattice[i], lattice[i + 1]));
  CHECK(lattice.index_of(ElementSet{0, 1}) == std::optional<std::size_t>(2));
  CHECK(!lattice.contains(ElementSet{1}));
  CHECK(lattice.dump() == "0000\n1000\n1100\n1010\n1110\n1111\n");
  CHECK(lattice.e_counts() == std::vector<std::uint64_t>{1, 2, 3, 3, 5, 6});
}

TEST_CASE("known down-set counts") {
  CHECK(enumerate_downsets(make_chain(5)).size() == 6);
  CHECK(enumerate_downsets(make_antichain(5)).size() == 32);
  const auto c2 = make_chain(2);
  const auto c2_3 = product(product(c2, c2), c2);
  CHECK(enumerate_downsets(c2_3).size() == 20);
  CHECK(enumerate_downsets(product(c2_3, c2)).size() == 168);
  const auto c3 = make_chain(3);
  CHECK(enumerate_downsets(product(product(c3, c3), c3)).size() == 980);
  CHECK_THROWS_AS(enumerate_downsets(make_antichain(12), 1000), BoundExceeded);
}

TEST_CASE("h by summation") {
  CHECK(h_by_summation(Poset{}) == 1);
  CHECK(h_by_summation(make_chain(1)) == 3);
  CHECK(h_by_summation(make_antichain(2)) == 9);
  CHECK(h_by_summation(make_lambda()) == 14);
  CHECK(h_by_summation(make_diamond()) == 20);
  CHECK(h_by_summation(product(make_chain(3), make_chain(3))) == 175);
  for (const auto& p : corpus_up_to(5)) {
    const auto h = h_by_summation(p);
    CHECK(h == naive::h_pairs(p));
    CHECK(h == naive::hom_count(p, make_chain(3)));
    CHECK(h == h_by_summation(dual(p)));
    CHECK(h == enumerate_downsets(product(p, make_chain(2))).size());
  }
  for (const auto& p : random_corpus(40, 7)) {
    CHECK(h_by_summation(p) == naive::h_pairs(p));
    CHECK(h_by_summation(p) == enumerate_downsets(product(p, make_chain(2))).size());
  }
}

TEST_CASE("Dedekind chain") {
  auto cube = make_chain(1);
  for (std::size_t k = 1; k <= 3; ++k) {
    cube = product(cube, make_chain(2));
    CHECK(h_by_summation(cube) == enumerate_downsets(product(cube, make_chain(2))).size());
  }
}

TEST_CASE("count_E") {
  const auto lattice = enumerate_downsets(make_lambda());
  CHECK(count_E(lattice, ElementSet{}) == 1);
  CHECK(count_E(lattice, ElementSet{0, 1}) == 4);
  CHECK(count_E(lattice, ElementSet{0, 1, 2}) == 5);
  CHECK_THROWS_AS(count_E(lattice, ElementSet{2}), std::invalid_argument);
  for (const auto& p : corpus_up_to(4)) {
    const auto l = enumerate_downsets(p);
    for (const auto& a : l)
      for (const auto& b : l)
        if (a.is_subset_of(b)) CHECK(count_E(l, a) <= count_E(l, b));
  }
}

TEST_CASE("partition by trace on an up-set") {
  for (const auto& r : corpus_up_to(5)) {
    const auto lattice = enumerate_downsets(r);
    for (const auto& d : lattice) {
      const auto y = r.carrier() - d;
      const auto groups = partition_JT(r, y);
      std::set<ElementSet> seen;
      std::size_t total = 0;
      for (const auto& g : groups) {
        CHECK(!g.members.empty());
        for (const auto& m : g.members) {
          CHECK((m & y) == g.t);
          CHECK(seen.insert(m).second);
        }
        total += g.members.size();
      }
      CHECK(total == lattice.size());

      BigInt sum = 0;
      for (const auto& [t, a] : a_coefficients(r, y)) sum += a;
      CHECK(sum == h_by_summation(lattice));
    }
  }
  CHECK_THROWS_AS(partition_JT(make_chain(2), ElementSet{0}), std::invalid_argument);
}

TEST_CASE("constrained pairs") {
  for (const auto& p : corpus_up_to(4)) CHECK(constrained_pair_count(p, {}) == h_by_summation(p));

  const auto c3 = make_chain(3);
  const auto sq = product(c3, c3);
  PairConstraints c;
  c.in_lower = ElementSet{0};
  c.out_lower = ElementSet{4};
  c.in_upper = ElementSet{4};
  c.out_upper = ElementSet{8};
  CHECK(constrained_pair_count(sq, c) == 64);

  PairConstraints impossible;
  impossible.in_lower = ElementSet{8};
  impossible.out_upper = ElementSet{0};
  CHECK(constrained_pair_count(sq, impossible) == 0);
}
