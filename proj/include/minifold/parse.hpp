#ifndef MINIFOLD_PARSE_HPP
#define MINIFOLD_PARSE_HPP

#include <string>
#include <vector>

#include "minifold/multipoly.hpp"

namespace minifold {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses the polynomial grammar documented in the README:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' nat]
//   base   := rational | ident | '(' expr ')'
// Whitespace is ignored everywhere. Every identifier must appear in `vars`.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

// Collects the identifiers appearing in a polynomial expression (sorted, unique).
std::vector<std::string> poly_identifiers(const std::string& text);

}  // namespace minifold

#endif
