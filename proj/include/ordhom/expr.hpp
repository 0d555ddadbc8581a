#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordhom/poset.hpp"

namespace ordhom {

/// Syntax tree of a poset expression.
///
///   expr := sum
///   sum  := osum ('+' osum)*        direct sum
///   osum := prod ('^' prod)*        ordinal sum, left below right
///   prod := atom ('*' atom)*        cartesian product
///   atom := 'C'INT | 'A'INT | 'L' | 'D' | 'H(' expr ',' expr ')'
///         | 'dual(' expr ')' | 'file:'PATH | '(' expr ')'
///
/// L is Λ, D is ◊.  A file path runs up to the next whitespace, ',' or ')'.
struct PosetExpr {
  enum class Kind { Chain, Antichain, Lambda, Diamond, Hom, Dual, File, Sum, OrdinalSum, Product };

  Kind kind = Kind::Chain;
  std::size_t size = 0;  // Chain, Antichain
  std::string path;      // File
  std::vector<std::shared_ptr<const PosetExpr>> children;

  std::string to_string() const;
};

/// Throws ParseError with the offending offset.
PosetExpr parse_expr(const std::string& text);
Poset evaluate(const PosetExpr& e);
inline Poset evaluate(const std::string& text) { return evaluate(parse_expr(text)); }

/// W × C_k recognised syntactically: a product of at least two factors whose
/// last factor is a chain.
struct EngineShape {
  Poset w;
  std::size_t k = 0;
};
std::optional<EngineShape> engine_shape(const PosetExpr& e);

}  // namespace ordhom
