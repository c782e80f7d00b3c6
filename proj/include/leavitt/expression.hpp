#pragma once

#include <string_view>

#include "leavitt/algebra.hpp"

namespace leavitt {

// Element literals:
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor ('.' factor)*
//   factor := NUMBER ['/' NUMBER] | name ['^*'] | '(' expr ')' ['^*']
//   name   := [A-Za-z_][A-Za-z0-9_']* | '"' any characters except '"' '"'
// A name denotes a vertex or a named edge; `e^*` is the ghost edge. A bare
// number c stands for c times the unit (the sum of all vertices).
// Example: "2.e1.e2^* - v3". Errors are Parse errors carrying the column.
Element parse_element(const Algebra& a, std::string_view text);

}  // namespace leavitt
