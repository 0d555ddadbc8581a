#include <CLI11.hpp>
#include <iostream>

#include "ordhom/cli.hpp"
#include "ordhom/errors.hpp"
#include "ordhom/expr.hpp"

using namespace ordhom;

namespace {

constexpr const char* kGrammar = R"(Poset expressions:
  C<n> chain, A<n> antichain, L = A2^A1, D = C2*C2,
  H(P,Q) poset of homomorphisms, dual(P), file:PATH (JSON poset),
  P*Q product, P^Q ordinal sum (P below Q), P+Q direct sum.
  Precedence: * binds tighter than ^, which binds tighter than +.
Product ids are row-major: (p, q) -> p*|Q| + q; use --show-elements to list them.
Exit codes: 0 ok, 1 usage or parse error, 2 bound exceeded, 3 verification failure.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting order homomorphisms into C3"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  std::string expr;
  std::string method = "auto";
  auto* h = app.add_subcommand("h", "h(P) = number of homomorphisms P -> C3");
  h->add_option("expr", expr, "poset expression")->required();
  h->add_option("-m,--method", method, "auto|summation|engine|brute|orderpoly|prodc2")
      ->check(CLI::IsMember(cli::kHMethods));

  cli::TableOptions table_opts;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "coefficient tables");
  table->add_option("family", table_opts.family, "cnck|lambda|diamond|hc2ck|polycoeffs|c3c3grid")
      ->required()
      ->check(CLI::IsMember(cli::kTableFamilies));
  table->add_option("--k-max", table_opts.k_max, "largest chain length k");
  table->add_option("--n-max", table_opts.n_max, "largest n (cnck only)");
  table->add_option("-f,--format", format, "csv|json|text")->check(CLI::IsMember(cli::kTableFormats));

  auto* surj = app.add_subcommand("surjective", "number of surjective homomorphisms P -> C3");
  surj->add_option("expr", expr, "poset expression")->required();

  std::vector<std::string> fixes;
  bool show_elements = false;
  auto* constrained = app.add_subcommand("constrained", "homomorphisms P -> C3 with prescribed values");
  constrained->add_option("expr", expr, "poset expression")->required();
  constrained->add_option("--fix", fixes, "id=level, level in 1..3 (repeatable)");
  constrained->add_flag("--show-elements", show_elements, "print the id -> element map first");

  bool list = false;
  auto* downsets = app.add_subcommand("downsets", "down-sets of P");
  downsets->add_option("expr", expr, "poset expression")->required();
  auto* count_flag = downsets->add_flag("--count", "print the number of down-sets (default)");
  downsets->add_flag("--list", list, "print every down-set")->excludes(count_flag);

  std::size_t x = 3;
  auto* omega = app.add_subcommand("omega", "order polynomial at x via linear extensions");
  omega->add_option("expr", expr, "poset expression")->required();
  omega->add_option("x", x, "positive integer")->required()->check(CLI::PositiveNumber);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "cross-check all methods on a corpus of posets");
  verify->add_option("--max-size", verify_opts.max_size, "exhaustive up to this many elements")
      ->check(CLI::Range(0, 7));
  verify->add_option("--samples", verify_opts.samples, "number of random posets");
  verify->add_option("--sample-min", verify_opts.sample_min, "smallest random poset")->check(CLI::Range(0, 8));
  verify->add_option("--sample-max", verify_opts.sample_max, "largest random poset")->check(CLI::Range(0, 8));
  verify->add_option("--seed", verify_opts.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    if (*h) {
      const auto r = cli::cmd_h(expr, method);
      std::cout << r.value << " (" << r.method << ")\n";
    } else if (*table) {
      std::cout << cli::render(cli::make_table(table_opts), format);
    } else if (*surj) {
      std::cout << cli::cmd_surjective(expr) << '\n';
    } else if (*constrained) {
      if (show_elements) std::cout << cli::element_map(evaluate(expr));
      std::cout << cli::cmd_constrained(expr, fixes) << '\n';
    } else if (*downsets) {
      std::cout << cli::cmd_downsets(expr, list);
    } else if (*omega) {
      std::cout << cli::cmd_omega(expr, x) << '\n';
    } else if (*verify) {
      const auto report = cli::cmd_verify(verify_opts, &std::cerr);
      for (const auto& f : report.failures) std::cout << "FAIL " << f << '\n';
      std::cout << report.summary() << '\n';
      return report.ok() ? cli::kOk : cli::kVerifyFailed;
    }
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return cli::kBound;
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << '\n';
    return cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  return cli::kOk;
}
