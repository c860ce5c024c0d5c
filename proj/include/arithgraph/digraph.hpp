#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithgraph/numtheory.hpp"

namespace arithgraph {

using Edge = std::pair<Prime, Prime>;

/// Directed graph on primes; loops allowed. Vertices and edges are kept
/// sorted and duplicate-free.
class PrimeDigraph {
 public:
  PrimeDigraph() = default;
  /// Edge endpoints are added to the vertex set.
  PrimeDigraph(std::vector<Prime> vertices, std::vector<Edge> edges);

  const std::vector<Prime>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool empty() const noexcept { return vertices_.empty(); }

  bool has_vertex(Prime p) const noexcept;
  bool has_edge(Prime p, Prime q) const noexcept;
  bool has_loop() const noexcept;

  void add_vertex(Prime p);
  void add_edge(Prime p, Prime q);

  std::vector<Prime> successors(Prime p) const;
  std::vector<Prime> predecessors(Prime p) const;

  /// Restriction to edges satisfying keep; vertices unchanged.
  PrimeDigraph filtered(const std::function<bool(const Edge&)>& keep) const;
  PrimeDigraph without_loops() const;

  /// e.g. "V={2,3} E={(2,3),(3,2)}"
  std::string to_string() const;

  friend bool operator==(const PrimeDigraph&, const PrimeDigraph&) = default;

 private:
  std::vector<Prime> vertices_;
  std::vector<Edge> edges_;
};

PrimeDigraph graph_union(const PrimeDigraph& a, const PrimeDigraph& b);
/// Vertices and edges of a are contained in those of b.
bool is_subgraph(const PrimeDigraph& a, const PrimeDigraph& b);
/// Edges of a that are missing from b.
std::vector<Edge> missing_edges(const PrimeDigraph& a, const PrimeDigraph& b);

/// A directed cycle as its vertex sequence (p1 -> p2 -> ... -> p1); a loop
/// is the one-vertex cycle [p].
using Cycle = std::vector<Prime>;

/// Some directed cycle of length >= min_len using only edges accepted by the
/// filter (all edges when it is empty). The search is exhaustive over simple
/// cycles, so the result is the first in the canonical order of simple_cycles.
std::optional<Cycle> find_cycle(const PrimeDigraph& g, std::size_t min_len = 1,
                                const std::function<bool(const Edge&)>& edge_filter = {});
bool has_cycle(const PrimeDigraph& g);

/// All simple directed cycles, each rotated to start at its least vertex,
/// ordered by (length, sequence).
std::vector<Cycle> simple_cycles(const PrimeDigraph& g);

/// Connected components ignoring direction; each sorted, ordered by least vertex.
std::vector<std::vector<Prime>> weak_components(const PrimeDigraph& g);

/// Repeatedly removes the least vertex without incoming edges. nullopt when
/// a cycle (loops included) blocks the peel.
std::optional<std::vector<Prime>> topological_peel(const PrimeDigraph& g);

}  // namespace arithgraph
