#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "ordhom/cli.hpp"
#include "ordhom/errors.hpp"
#include "ordhom/expr.hpp"
#include "ordhom/families.hpp"
#include "ordhom/poset_json.hpp"

using namespace ordhom;

TEST_CASE("expressions") {
  CHECK(evaluate("C3*C3*C3").size() == 27);
  CHECK(evaluate("A2^A1") == make_lambda());
  CHECK(evaluate("L") == make_lambda());
  CHECK(evaluate("D") == make_diamond());
  CHECK(evaluate("C2*C2") == make_diamond());
  CHECK(evaluate("H(C2,C5)").size() == 15);
  CHECK(evaluate("dual(L)") == dual(make_lambda()));
  CHECK(evaluate(" ( C1 + C1 ) ^ C1 ") == make_lambda());
  // * binds tighter than ^, which binds tighter than +
  CHECK(evaluate("C1+C1^C1").size() == 3);
  CHECK(evaluate("C1+C1^C1") == direct_sum(make_chain(1), make_chain(2)));
  CHECK(evaluate("A2^C1*C2") == ordinal_sum(make_antichain(2), make_chain(2)));
  CHECK(parse_expr("C2*A3+L").to_string() == "((C2*A3)+L)");
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("C3*") == 3);
  CHECK(position_of("C3 C3") == 3);
  CHECK(position_of("X") == 0);
  CHECK(position_of("H(C2 C3)") == 5);
  CHECK(position_of("Cx") == 1);
  CHECK(position_of("(C2") == 3);
}

TEST_CASE("file atoms") {
  const auto path = std::filesystem::temp_directory_path() / "ordhom_test_lambda.json";
  {
    std::ofstream out(path);
    out << poset_to_json(make_lambda(), "lambda");
  }
  CHECK(evaluate("file:" + path.string()) == make_lambda());
  CHECK(evaluate("(file:" + path.string() + ")*C2").size() == 6);
  CHECK(evaluate("file:" + path.string() + " * C2").size() == 6);
  std::filesystem::remove(path);
  CHECK_THROWS(evaluate("file:/nonexistent/ordhom.json"));
}

TEST_CASE("engine shapes") {
  const auto s = engine_shape(parse_expr("C3*C3*C3"));
  REQUIRE(s);
  CHECK(s->k == 3);
  CHECK(s->w == product(make_chain(3), make_chain(3)));
  CHECK(engine_shape(parse_expr("L*C4"))->k == 4);
  CHECK(!engine_shape(parse_expr("C3")));
  CHECK(!engine_shape(parse_expr("C3*L")));
  CHECK(!engine_shape(parse_expr("A3")));
}

TEST_CASE("h command") {
  CHECK(cli::cmd_h("C3*C3*C3").value == 211250);
  CHECK(cli::cmd_h("C3*C3*C3").method == "engine");
  CHECK(cli::cmd_h("H(C2,C4)", "summation").value == 126);
  CHECK(cli::cmd_h("A3").value == 27);
  CHECK(cli::cmd_h("A3").method == "summation");
  for (const auto& m : {"summation", "brute", "orderpoly", "prodc2", "engine"}) CHECK(cli::cmd_h("C3*C3", m).value == 175);
  CHECK_THROWS_AS(cli::cmd_h("A3", "engine"), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_h("A3", "magic"), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_h("A3*"), ParseError);
}

TEST_CASE("other commands") {
  CHECK(cli::cmd_surjective("C3*C3") == 118);
  CHECK(cli::cmd_constrained("C3*C3", {"0=1", "4=2", "8=3"}) == 64);
  CHECK(cli::cmd_constrained("C3*C3*C3", {"0=1", "13=2", "26=3"}) == 116211);
  CHECK(cli::cmd_constrained("C3", {"0=1", "0=2"}) == 0);
  CHECK_THROWS_AS(cli::cmd_constrained("C3", {"0:1"}), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_constrained("C3", {"5=1"}), cli::UsageError);
  CHECK_THROWS_AS(cli::cmd_constrained("C3", {"0=4"}), cli::UsageError);
  CHECK(cli::cmd_downsets("H(C2,C6)", false) == "64\n");
  CHECK(cli::cmd_downsets("L", true) == "{}\n{l}\n{r}\n{l,r}\n{l,r,t}\n");
  CHECK(cli::cmd_omega("A2", 3) == 9);
  CHECK(cli::cmd_omega("C2", 5) == 15);
  CHECK_THROWS_AS(cli::cmd_omega("C2", 0), cli::UsageError);
  const auto map = cli::element_map(evaluate("C3*C3"));
  CHECK(map.rfind("0 ", 0) == 0);
  CHECK(map.find("\n8 ") != std::string::npos);
}

TEST_CASE("tables") {
  cli::TableOptions o;
  o.family = "hc2ck";
  o.k_max = 3;
  const auto hc = cli::render(cli::make_table(o), "csv");
  CHECK(hc.rfind("k,j,a_j,h\n", 0) == 0);
  CHECK(hc.find("3,0,10,35\n3,1,10,35\n3,2,7,35\n3,3,8,35\n") != std::string::npos);

  o.family = "polycoeffs";
  o.k_max = 2;
  CHECK(cli::render(cli::make_table(o), "csv").find("2,0,1\n2,1,2\n2,2,2\n") != std::string::npos);

  o.family = "cnck";
  o.k_max = 2;
  o.n_max = 2;
  const auto cn = cli::render(cli::make_table(o), "csv");
  CHECK(cn.rfind("n,k,j,a_j,h\n", 0) == 0);
  CHECK(cn.find("2,2,0,6,20\n") != std::string::npos);

  // h(◊ × C2) shows up among the sub-posets of C3 × C3.
  o.family = "c3c3grid";
  o.k_max = 2;
  const auto grid = cli::make_table(o);
  const auto diamond_mask = BigInt((1 << 4) | (1 << 5) | (1 << 7) | (1 << 8));
  bool found = false;
  for (const auto& row : grid.rows)
    if (row[0] == diamond_mask && row[2] == 2) found = row[3] == 168;
  CHECK(found);
  CHECK(grid.rows.front()[0] == 511);
  CHECK(grid.rows.front()[3] == 175);

  o.family = "lambda";
  o.k_max = 3;
  const auto doc = nlohmann::json::parse(cli::render(cli::make_table(o), "json"));
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["rows"][2][6] == "330");
  CHECK(doc["columns"][0] == "k");

  o.family = "diamond";
  o.k_max = 10;
  const auto big = cli::make_table(o);
  CHECK(big.rows.back()[7] == h_product_chain(make_diamond(), 10));
  CHECK(cli::render(big, "csv") == cli::render(cli::make_table(o), "csv"));
  CHECK(cli::render(big, "text").find("a_diamond") != std::string::npos);

  CHECK_THROWS_AS(cli::render(big, "xml"), cli::UsageError);
  o.family = "nope";
  CHECK_THROWS_AS(cli::make_table(o), cli::UsageError);
}
