#pragma once

#include <string>
#include <string_view>

#include "arithgraph/digraph.hpp"

namespace arithgraph {

enum class GraphFormat { Json, Dot };

/// Accepts json, dot. Throws Error(InvalidSpec).
GraphFormat parse_graph_format(std::string_view text);

/// JSON: {"vertices":[...],"edges":[[p,q],...]} on one line.
/// DOT: a digraph block with one node per prime and one arrow per edge.
std::string emit_graph(const PrimeDigraph& g, GraphFormat format);

}  // namespace arithgraph
