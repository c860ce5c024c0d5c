#pragma once

#include <string_view>

#include "arithgraph/catalog.hpp"

namespace arithgraph {

/// Grammar:
///   spec    := atom ('x' atom)*            left-associative products
///   atom    := 'S:' n | 'A:' n | 'C:' n | 'D:' n | 'PSL2:' q | 'PSL3:3'
///            | 'Sz:8' | 'Schmidt:' p ',' q | 'file:' path
///   path    := '"' chars '"'  (\" and \\ escapes)
///            | chars up to the end or an 'x' that starts another atom
/// Whitespace outside quoted paths is ignored. Throws Error(ParseError)
/// naming the column and the expected tokens. Parameter ranges are checked
/// by build(), not here.
GroupSpec parse_group_spec(std::string_view text);

}  // namespace arithgraph
