#ifndef LPA_TERM_PARSER_HPP
#define LPA_TERM_PARSER_HPP

#include <string>

#include "lpa/terms.hpp"

namespace lpa {

/// Parses the element syntax: vertices and edges by id, `e#2` for a
/// parallel instance, postfix `*` for the involution, juxtaposition for
/// products, rational coefficients, `+`/`-`, and parentheses.
/// Example: `v f (u + e)` or `1/2 e f* - 3 u`.
LinearCombination parse_element(const Graph& g, const std::string& text);

} // namespace lpa

#endif // LPA_TERM_PARSER_HPP
