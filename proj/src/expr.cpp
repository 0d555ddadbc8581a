#include "ordhom/expr.hpp"

#include <cctype>
#include <limits>

#include "ordhom/errors.hpp"
#include "ordhom/poset_json.hpp"

namespace ordhom {

namespace {

using Node = std::shared_ptr<const PosetExpr>;

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  PosetExpr parse() {
    auto e = sum();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return *e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(const std::string& w) {
    skip_space();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static Node binary(PosetExpr::Kind kind, std::vector<Node> parts) {
    if (parts.size() == 1) return parts.front();
    auto e = std::make_shared<PosetExpr>();
    e->kind = kind;
    e->children = std::move(parts);
    return e;
  }

  Node sum() {
    std::vector<Node> parts{osum()};
    while (accept('+')) parts.push_back(osum());
    return binary(PosetExpr::Kind::Sum, std::move(parts));
  }

  Node osum() {
    std::vector<Node> parts{prod()};
    while (accept('^')) parts.push_back(prod());
    return binary(PosetExpr::Kind::OrdinalSum, std::move(parts));
  }

  Node prod() {
    std::vector<Node> parts{atom()};
    while (accept('*')) parts.push_back(atom());
    return binary(PosetExpr::Kind::Product, std::move(parts));
  }

  std::size_t integer() {
    skip_space();
    const auto start = pos_;
    std::size_t value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (value > std::numeric_limits<std::size_t>::max() / 10 - 9) fail("integer too large");
      value = value * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  Node atom() {
    skip_space();
    auto e = std::make_shared<PosetExpr>();
    if (accept_word("dual(")) {
      e->kind = PosetExpr::Kind::Dual;
      e->children.push_back(sum());
      expect(')');
    } else if (accept_word("file:")) {
      e->kind = PosetExpr::Kind::File;
      const auto start = pos_;
      while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ',' &&
             s_[pos_] != ')')
        ++pos_;
      if (pos_ == start) fail("expected a file path");
      e->path = s_.substr(start, pos_ - start);
    } else if (accept_word("H(")) {
      e->kind = PosetExpr::Kind::Hom;
      e->children.push_back(sum());
      expect(',');
      e->children.push_back(sum());
      expect(')');
    } else if (accept('(')) {
      auto inner = sum();
      expect(')');
      return inner;
    } else if (accept('C')) {
      e->kind = PosetExpr::Kind::Chain;
      e->size = integer();
    } else if (accept('A')) {
      e->kind = PosetExpr::Kind::Antichain;
      e->size = integer();
    } else if (accept('L')) {
      e->kind = PosetExpr::Kind::Lambda;
    } else if (accept('D')) {
      e->kind = PosetExpr::Kind::Diamond;
    } else if (pos_ == s_.size()) {
      fail("unexpected end of expression");
    } else {
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }
    return e;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

Poset fold(const PosetExpr& e, Poset (*op)(const Poset&, const Poset&)) {
  auto acc = evaluate(*e.children.front());
  for (std::size_t i = 1; i < e.children.size(); ++i) acc = op(acc, evaluate(*e.children[i]));
  return acc;
}

std::string join(const PosetExpr& e, const char* sep) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) out += sep;
    out += e.children[i]->to_string();
  }
  return out + ")";
}

}  // namespace

std::string PosetExpr::to_string() const {
  switch (kind) {
    case Kind::Chain: return "C" + std::to_string(size);
    case Kind::Antichain: return "A" + std::to_string(size);
    case Kind::Lambda: return "L";
    case Kind::Diamond: return "D";
    case Kind::Hom: return "H(" + children[0]->to_string() + "," + children[1]->to_string() + ")";
    case Kind::Dual: return "dual(" + children[0]->to_string() + ")";
    case Kind::File: return "file:" + path;
    case Kind::Sum: return join(*this, "+");
    case Kind::OrdinalSum: return join(*this, "^");
    case Kind::Product: return join(*this, "*");
  }
  return {};
}

PosetExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

Poset evaluate(const PosetExpr& e) {
  switch (e.kind) {
    case PosetExpr::Kind::Chain: return make_chain(e.size);
    case PosetExpr::Kind::Antichain: return make_antichain(e.size);
    case PosetExpr::Kind::Lambda: return make_lambda();
    case PosetExpr::Kind::Diamond: return make_diamond();
    case PosetExpr::Kind::Hom: return hom_poset(evaluate(*e.children[0]), evaluate(*e.children[1]));
    case PosetExpr::Kind::Dual: return dual(evaluate(*e.children[0]));
    case PosetExpr::Kind::File: return load_poset(e.path);
    case PosetExpr::Kind::Sum: return fold(e, direct_sum);
    case PosetExpr::Kind::OrdinalSum: return fold(e, ordinal_sum);
    case PosetExpr::Kind::Product: return fold(e, product);
  }
  return {};
}

std::optional<EngineShape> engine_shape(const PosetExpr& e) {
  if (e.kind != PosetExpr::Kind::Product || e.children.size() < 2) return std::nullopt;
  const auto& last = *e.children.back();
  if (last.kind != PosetExpr::Kind::Chain) return std::nullopt;
  PosetExpr w;
  w.kind = PosetExpr::Kind::Product;
  w.children.assign(e.children.begin(), e.children.end() - 1);
  return EngineShape{w.children.size() == 1 ? evaluate(*w.children.front()) : evaluate(w), last.size};
}

}  // namespace ordhom
