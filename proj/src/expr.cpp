#include "gj/expr.hpp"

#include <cctype>

namespace gj {
namespace {

const char* const kNames[] = {"C",     "D",     "Dic",       "S",          "A",
                              "Q8",    "Tstar", "Ostar",     "Istar",      "SL",
                              "GL",    "SL25dot2", "SL25colon2", "ES32minus", "ES1920"};

bool is_known_name(const std::string& s) {
  for (const char* n : kNames)
    if (s == n) return true;
  return false;
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect_char(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  std::string peek_ident() {
    skip_ws();
    std::size_t p = pos;
    std::string s;
    while (p < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_')) {
      s.push_back(text[p]);
      ++p;
    }
    return s;
  }

  std::string take_ident() {
    skip_ws();
    std::string s = peek_ident();
    if (s.empty()) throw ParseError("expected a name", pos);
    pos += s.size();
    return s;
  }

  int take_int() {
    skip_ws();
    std::size_t start = pos;
    std::string s;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      s.push_back(text[pos]);
      ++pos;
    }
    if (s.empty()) throw ParseError("expected an integer", start);
    if (s.size() > 7) throw ParseError("integer out of range", start);
    long v = std::stol(s);
    if (v <= 0 || v > 1000000) throw ParseError("integer out of range", start);
    return static_cast<int>(v);
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (true) {
      skip_ws();
      std::size_t save = pos;
      if (peek_ident() == "x") {
        pos += 1;
        ExprPtr rhs = parse_term();
        auto node = std::make_shared<GroupExpr>();
        node->kind = GroupExpr::Kind::Direct;
        node->left = e;
        node->right = rhs;
        e = node;
      } else {
        pos = save;
        break;
      }
    }
    return e;
  }

  ExprPtr parse_term() {
    skip_ws();
    std::size_t start = pos;
    std::string name = take_ident();
    if (name == "swap2") {
      expect_char('(');
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::Swap2;
      node->left = parse_expr();
      expect_char(')');
      return node;
    }
    if (name == "semi") {
      expect_char('(');
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::Semidirect;
      node->left = parse_expr();
      expect_char(',');
      node->right = parse_expr();
      expect_char(',');
      std::size_t apos = pos;
      node->action = take_ident();
      if (node->action != "swap" && node->action != "invert" && node->action != "outer2")
        throw ParseError("unknown action '" + node->action + "'", apos);
      expect_char(')');
      return node;
    }
    if (name == "cprod") {
      expect_char('(');
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::CentralProduct;
      node->left = parse_expr();
      expect_char(',');
      node->right = parse_expr();
      expect_char(')');
      return node;
    }
    if (name == "cext") {
      expect_char('(');
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::CyclicExt;
      node->left = parse_expr();
      expect_char(',');
      std::size_t apos = pos;
      node->autsel = take_ident();
      if (node->autsel != "outer2" && node->autsel != "id")
        throw ParseError("unknown automorphism selector '" + node->autsel + "'", apos);
      expect_char(',');
      node->ext_m = take_int();
      expect_char(',');
      apos = pos;
      node->zsel = take_ident();
      if (node->zsel != "id" && node->zsel != "zcenter")
        throw ParseError("unknown central selector '" + node->zsel + "'", apos);
      expect_char(')');
      return node;
    }
    if (!is_known_name(name)) throw ParseError("unknown group name '" + name + "'", start);
    auto node = std::make_shared<GroupExpr>();
    node->kind = GroupExpr::Kind::Named;
    node->name = name;
    if (peek_char('(')) {
      expect_char('(');
      node->params.push_back(take_int());
      while (peek_char(',')) {
        expect_char(',');
        node->params.push_back(take_int());
      }
      expect_char(')');
    }
    return node;
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  Parser p(text);
  ExprPtr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return e;
}

std::string render(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Named: {
      std::string s = e.name;
      if (!e.params.empty()) {
        s += "(";
        for (std::size_t i = 0; i < e.params.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(e.params[i]);
        }
        s += ")";
      }
      return s;
    }
    case GroupExpr::Kind::Direct:
      return render(*e.left) + " x " + render(*e.right);
    case GroupExpr::Kind::Swap2:
      return "swap2(" + render(*e.left) + ")";
    case GroupExpr::Kind::Semidirect:
      return "semi(" + render(*e.left) + ", " + render(*e.right) + ", " + e.action + ")";
    case GroupExpr::Kind::CentralProduct:
      return "cprod(" + render(*e.left) + ", " + render(*e.right) + ")";
    case GroupExpr::Kind::CyclicExt:
      return "cext(" + render(*e.left) + ", " + e.autsel + ", " + std::to_string(e.ext_m) +
             ", " + e.zsel + ")";
  }
  return "";
}

}  // namespace gj
