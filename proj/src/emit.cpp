#include "arithgraph/emit.hpp"

#include <json.hpp>

#include "arithgraph/errors.hpp"

namespace arithgraph {

GraphFormat parse_graph_format(std::string_view text) {
  if (text == "json") return GraphFormat::Json;
  if (text == "dot") return GraphFormat::Dot;
  throw Error(ErrorKind::InvalidSpec, "unknown format '" + std::string(text) + "' (json or dot)");
}

std::string emit_graph(const PrimeDigraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (Prime p : g.vertices()) j["vertices"].push_back(p);
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [p, q] : g.edges()) j["edges"].push_back({p, q});
    return j.dump();
  }
  std::string out = "digraph G {\n";
  for (Prime p : g.vertices()) out += "  \"" + std::to_string(p) + "\";\n";
  for (const auto& [p, q] : g.edges()) out += "  \"" + std::to_string(p) + "\" -> \"" + std::to_string(q) + "\";\n";
  return out + "}\n";
}

}  // namespace arithgraph
