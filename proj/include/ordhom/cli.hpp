#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordhom/bigint.hpp"
#include "ordhom/poset.hpp"
#include "ordhom/verify.hpp"

namespace ordhom::cli {

/// Bad flags or an inapplicable method.  Exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kOk = 0, kUsage = 1, kBound = 2, kVerifyFailed = 3 };

struct HResult {
  BigInt value;
  std::string method;
};

inline const std::vector<std::string> kHMethods{"auto", "summation", "engine", "brute", "orderpoly", "prodc2"};

HResult cmd_h(const std::string& expr, const std::string& method = "auto");

/// A rectangular table of integers with named columns.
struct Table {
  std::string family;
  std::vector<std::string> columns;
  std::vector<std::vector<BigInt>> rows;
};

inline const std::vector<std::string> kTableFamilies{"cnck", "lambda", "diamond", "hc2ck", "polycoeffs", "c3c3grid"};
inline const std::vector<std::string> kTableFormats{"csv", "json", "text"};

struct TableOptions {
  std::string family;
  std::size_t k_max = 5;
  std::size_t n_max = 4;
};

Table make_table(const TableOptions& options);
std::string render(const Table& table, const std::string& format);

BigInt cmd_surjective(const std::string& expr);

/// Each assignment reads "id=level", level in {1, 2, 3}.
BigInt cmd_constrained(const std::string& expr, const std::vector<std::string>& assignments);
/// "id label" per line.
std::string element_map(const Poset& p);

/// Either the count or one down-set per line, in lattice order.
std::string cmd_downsets(const std::string& expr, bool list);

BigInt cmd_omega(const std::string& expr, std::size_t x);

VerifyReport cmd_verify(const VerifyOptions& options, std::ostream* progress = nullptr);

}  // namespace ordhom::cli
