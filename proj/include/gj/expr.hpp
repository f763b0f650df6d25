#ifndef GJ_EXPR_HPP
#define GJ_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "gj/error.hpp"

namespace gj {

// Construction expression tree.
//
//   expr   := term { "x" term }                    (direct product, left assoc)
//   term   := name "(" int {"," int} ")" | name
//           | "swap2(" expr ")"
//           | "semi(" expr "," expr "," action ")"
//           | "cext(" expr "," autsel "," int "," zsel ")"
//           | "cprod(" expr "," expr ")"
//   name   := C | D | Dic | S | A | Q8 | Tstar | Ostar | Istar | SL | GL
//           | SL25dot2 | SL25colon2 | ES32minus | ES1920
//   action := swap | invert | outer2
//   autsel := outer2 | id
//   zsel   := id | zcenter
//
// Whitespace-insensitive, case-sensitive.
struct GroupExpr {
  enum class Kind { Named, Direct, Swap2, Semidirect, CentralProduct, CyclicExt };

  Kind kind = Kind::Named;
  std::string name;                       // Named
  std::vector<int> params;                // Named
  std::shared_ptr<const GroupExpr> left;  // child / first factor / N
  std::shared_ptr<const GroupExpr> right; // second factor / H
  std::string action;                     // Semidirect: swap | invert | outer2
  std::string autsel;                     // CyclicExt: outer2 | id
  int ext_m = 0;                          // CyclicExt
  std::string zsel;                       // CyclicExt: id | zcenter
};

using ExprPtr = std::shared_ptr<const GroupExpr>;

// Throws ParseError (with offset) on malformed input.
ExprPtr parse_expr(const std::string& text);

// Canonical rendering; parse_expr(render(e)) reproduces the tree.
std::string render(const GroupExpr& e);

}  // namespace gj

#endif
