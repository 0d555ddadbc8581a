#include <doctest.h>

#include "naive.hpp"
#include "ordhom/downsets.hpp"
#include "ordhom/errors.hpp"
#include "ordhom/poset.hpp"
#include "ordhom/poset_json.hpp"

using namespace ordhom;

namespace {

std::vector<Poset> small_posets() {
  return {Poset{},         make_chain(1),  make_chain(3),  make_antichain(3),
          make_lambda(),   make_diamond(), dual(make_lambda()),
          direct_sum(make_chain(2), make_chain(1)), ordinal_sum(make_antichain(2), make_chain(2))};
}

}  // namespace

TEST_CASE("element sets") {
  ElementSet s{1, 5, 200};
  CHECK(s.count() == 3);
  CHECK(s.test(200));
  CHECK(s.bound() == 201);
  CHECK(ElementSet{1, 5}.is_subset_of(s));
  CHECK((s - ElementSet{5}) == ElementSet{1, 200});
  CHECK(ElementSet{0, 1} < ElementSet{2});
  CHECK(ElementSet::range(3).to_bits(4) == "1110");
}

TEST_CASE("constructors") {
  CHECK(make_chain(4).relation_size() == 10);
  CHECK(make_antichain(4).relation_size() == 4);
  const auto lam = make_lambda();
  CHECK(lam.leq(0, 2));
  CHECK(lam.leq(1, 2));
  CHECK(!lam.leq(0, 1));
  const auto dia = make_diamond();
  CHECK(dia.size() == 4);
  CHECK(dia.leq(0, 3));
  CHECK(!dia.leq(1, 2));
  for (const auto& p : small_posets()) CHECK(!validate(p));
}

TEST_CASE("product layout and sizes") {
  const auto c3 = make_chain(3);
  const auto cube = product(product(c3, c3), c3);
  CHECK(cube.size() == 27);
  CHECK(!validate(cube));
  // (p, q, r) -> 9p + 3q + r, 0-based
  CHECK(cube.leq(0, 13));
  CHECK(cube.leq(13, 26));
  CHECK(!cube.leq(1, 3));  // (0,0,1) vs (0,1,0)
  const auto right = product(c3, product(c3, c3));
  CHECK(right == cube);
  const auto p = make_lambda();
  const auto q = make_chain(2);
  const auto pq = product(p, q);
  CHECK(pq.size() == 6);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(pq.leq(a * 2 + i, b * 2 + j) == (p.leq(a, b) && q.leq(i, j)));
}

TEST_CASE("sums and duality") {
  const auto s = direct_sum(make_chain(2), make_chain(1));
  CHECK(s.leq(0, 1));
  CHECK(!s.leq(1, 2));
  CHECK(!s.leq(2, 1));
  const auto lam = ordinal_sum(make_antichain(2), make_antichain(1));
  CHECK(lam == make_lambda());
  for (const auto& p : small_posets()) {
    CHECK(dual(dual(p)) == p);
    CHECK(!validate(dual(p)));
  }
}

TEST_CASE("closures") {
  for (const auto& p : small_posets()) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << p.size()); ++s) {
      const auto b = ElementSet::from_word(s);
      const auto d = down_closure(p, b);
      CHECK(is_downset(p, d));
      CHECK(is_upset(p, p.carrier() - d));
      CHECK(is_upset(p, up_closure(p, b)));
    }
  }
  const auto dia = make_diamond();
  CHECK(minimal_points(dia) == ElementSet{0});
  CHECK(maximal_points(dia) == ElementSet{3});
  CHECK(minimal_points(dia, ElementSet{1, 2, 3}) == ElementSet{1, 2});
}

TEST_CASE("covers and linear extensions") {
  const auto dia = make_diamond();
  const auto c = covers(dia);
  CHECK(c.size() == 4);
  CHECK(ids_form_linear_extension(dia));
  const auto d = dual(dia);
  CHECK(!ids_form_linear_extension(d));
  const auto ext = linear_extension(d);
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j) CHECK(!d.less(ext[j], ext[i]));
}

TEST_CASE("cover lists") {
  const auto p = Poset::from_covers(3, {{0, 1}, {1, 2}});
  CHECK(p == make_chain(3));
  CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), PosetError);
  CHECK_THROWS_AS(Poset::from_covers(2, {{0, 2}}), PosetError);
}

TEST_CASE("validate reports broken relations") {
  auto not_reflexive = Poset::from_relation(2, [](std::size_t x, std::size_t y) { return x < y; });
  CHECK(validate(not_reflexive).has_value());
  auto not_transitive = Poset::from_relation(3, [](std::size_t x, std::size_t y) { return x == y || y == x + 1; });
  CHECK(validate(not_transitive).has_value());
  auto not_antisymmetric = Poset::from_relation(2, [](std::size_t, std::size_t) { return true; });
  CHECK(validate(not_antisymmetric).has_value());
}

TEST_CASE("hom posets") {
  const auto h = hom_poset(make_chain(2), make_chain(5));
  CHECK(h.size() == 15);
  CHECK(!validate(h));
  CHECK(hom_poset(make_chain(2), make_chain(2)) == make_chain(3));
  CHECK(hom_poset(make_antichain(2), make_chain(3)).size() == 9);
  CHECK_THROWS_AS(hom_poset(make_antichain(10), make_chain(10), 1000), BoundExceeded);

  for (const auto& p : small_posets())
    for (const auto& q : small_posets()) {
      if (p.size() > 4 || q.size() > 4) continue;
      CHECK(hom_poset(p, q).size() == naive::hom_count(p, q));
    }
}

TEST_CASE("hom poset cardinality symmetry") {
  std::vector<Poset> tiny{Poset{}, make_chain(1), make_chain(2), make_antichain(2), make_chain(3),
                          make_antichain(3), make_lambda(), dual(make_lambda())};
  for (const auto& p : tiny)
    for (const auto& q : tiny) {
      const auto dp = lattice_as_poset(enumerate_downsets(p));
      const auto dq = lattice_as_poset(enumerate_downsets(q));
      CHECK(naive::hom_count(p, dq) == naive::hom_count(q, dp));
    }
}

TEST_CASE("json round trip") {
  const auto text = R"({"name": "lambda", "elements": ["l", "r", "t"], "covers": [[0, 2], [1, 2]]})";
  const auto p = poset_from_json(text);
  CHECK(p == make_lambda());
  CHECK(p.label(2) == "t");
  CHECK(poset_from_json(poset_to_json(make_diamond(), "diamond")) == make_diamond());
  CHECK_THROWS_AS(poset_from_json(R"({"elements": ["a", "b"], "covers": [[0, 1], [1, 0]]})"), PosetError);
  CHECK_THROWS(poset_from_json("{not json"));
}

TEST_CASE("sub-posets and closures by example") {
  const auto dia = make_diamond();
  const auto sub = induced(dia, ElementSet{0, 1, 3});
  CHECK(sub.poset == make_chain(3));
  CHECK(sub.to_parent == std::vector<std::size_t>{0, 1, 3});
  CHECK(remove_down_closure(dia, ElementSet{}).poset == dia);
  const auto c3 = make_chain(3);
  CHECK(remove_down_closure(product(c3, c3), ElementSet{0}).poset.size() == 8);
  CHECK(down_closure(make_chain(4), ElementSet{2}) == ElementSet{0, 1, 2});
  CHECK(minimal_points(make_lambda()) == ElementSet{0, 1});
  CHECK(is_downset(dia, ElementSet{0, 1}));
  CHECK(!is_downset(dia, ElementSet{1}));
  CHECK(ordinal_sum(make_chain(2), make_chain(3)) == make_chain(5));
  CHECK(direct_sum(make_chain(1), make_chain(1)) == make_antichain(2));
  CHECK(product(make_chain(1), make_lambda()) == make_lambda());
  CHECK(make_chain(0).empty());
  CHECK(make_chain(3).relation_size() == 6);
  CHECK(hom_poset(make_chain(2), make_chain(4)).size() == 10);
  CHECK(hom_poset(make_antichain(2), make_chain(2)) == make_diamond());
}

TEST_CASE("down-set lattices as posets") {
  CHECK(lattice_as_poset(enumerate_downsets(make_antichain(2))) == make_diamond());
  CHECK(lattice_as_poset(enumerate_downsets(make_chain(4))) == make_chain(5));
  CHECK(lattice_as_poset(enumerate_downsets(Poset{})) == make_chain(1));
}
