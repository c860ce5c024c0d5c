#include "arithgraph/digraph.hpp"

#include <algorithm>

namespace arithgraph {

namespace {

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

PrimeDigraph::PrimeDigraph(std::vector<Prime> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& [p, q] : edges_) {
    vertices_.push_back(p);
    vertices_.push_back(q);
  }
  sort_unique(vertices_);
  sort_unique(edges_);
}

bool PrimeDigraph::has_vertex(Prime p) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

bool PrimeDigraph::has_edge(Prime p, Prime q) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{p, q});
}

bool PrimeDigraph::has_loop() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
}

void PrimeDigraph::add_vertex(Prime p) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) vertices_.insert(it, p);
}

void PrimeDigraph::add_edge(Prime p, Prime q) {
  add_vertex(p);
  add_vertex(q);
  const Edge e{p, q};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

std::vector<Prime> PrimeDigraph::successors(Prime p) const {
  std::vector<Prime> out;
  for (const auto& [a, b] : edges_)
    if (a == p) out.push_back(b);
  return out;
}

std::vector<Prime> PrimeDigraph::predecessors(Prime p) const {
  std::vector<Prime> out;
  for (const auto& [a, b] : edges_)
    if (b == p) out.push_back(a);
  sort_unique(out);
  return out;
}

PrimeDigraph PrimeDigraph::filtered(const std::function<bool(const Edge&)>& keep) const {
  PrimeDigraph out;
  out.vertices_ = vertices_;
  for (const auto& e : edges_)
    if (keep(e)) out.edges_.push_back(e);
  return out;
}

PrimeDigraph PrimeDigraph::without_loops() const {
  return filtered([](const Edge& e) { return e.first != e.second; });
}

std::string PrimeDigraph::to_string() const {
  std::string s = "V={";
  for (std::size_t i = 0; i < vertices_.size(); ++i) s += (i ? "," : "") + std::to_string(vertices_[i]);
  s += "} E={";
  for (std::size_t i = 0; i < edges_.size(); ++i)
    s += (i ? ",(" : "(") + std::to_string(edges_[i].first) + "," + std::to_string(edges_[i].second) + ")";
  return s + "}";
}

PrimeDigraph graph_union(const PrimeDigraph& a, const PrimeDigraph& b) {
  std::vector<Prime> v = set_union(a.vertices(), b.vertices());
  std::vector<Edge> e;
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(), std::back_inserter(e));
  return PrimeDigraph(std::move(v), std::move(e));
}

bool is_subgraph(const PrimeDigraph& a, const PrimeDigraph& b) {
  return std::includes(b.vertices().begin(), b.vertices().end(), a.vertices().begin(), a.vertices().end()) &&
         std::includes(b.edges().begin(), b.edges().end(), a.edges().begin(), a.edges().end());
}

std::vector<Edge> missing_edges(const PrimeDigraph& a, const PrimeDigraph& b) {
  std::vector<Edge> out;
  std::set_difference(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Cycle> simple_cycles(const PrimeDigraph& g) {
  std::vector<Cycle> out;
  Cycle path;
  const auto& vs = g.vertices();
  for (Prime start : vs) {
    path.assign(1, start);
    // Only vertices above start may appear, so each cycle is found once
    // from its least vertex.
    auto dfs = [&](auto&& self, Prime at) -> void {
      for (Prime nxt : g.successors(at)) {
        if (nxt == start) {
          out.push_back(path);
        } else if (nxt > start && std::find(path.begin(), path.end(), nxt) == path.end()) {
          path.push_back(nxt);
          self(self, nxt);
          path.pop_back();
        }
      }
    };
    dfs(dfs, start);
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::optional<Cycle> find_cycle(const PrimeDigraph& g, std::size_t min_len,
                                const std::function<bool(const Edge&)>& edge_filter) {
  const PrimeDigraph h = edge_filter ? g.filtered(edge_filter) : g;
  for (auto& c : simple_cycles(h))
    if (c.size() >= min_len) return c;
  return std::nullopt;
}

bool has_cycle(const PrimeDigraph& g) { return !topological_peel(g).has_value(); }

std::vector<std::vector<Prime>> weak_components(const PrimeDigraph& g) {
  const auto& vs = g.vertices();
  std::vector<std::size_t> parent(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) parent[i] = i;
  auto idx = [&](Prime p) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), p) - vs.begin()); };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [p, q] : g.edges()) {
    const std::size_t a = find(idx(p)), b = find(idx(q));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Prime>> out;
  std::vector<std::size_t> slot(vs.size(), SIZE_MAX);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::size_t r = find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(vs[i]);
  }
  return out;
}

std::optional<std::vector<Prime>> topological_peel(const PrimeDigraph& g) {
  std::vector<Prime> left = g.vertices();
  std::vector<Edge> edges = g.edges();
  std::vector<Prime> order;
  while (!left.empty()) {
    auto it = std::find_if(left.begin(), left.end(), [&](Prime v) {
      return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.second == v; });
    });
    if (it == left.end()) return std::nullopt;
    const Prime v = *it;
    order.push_back(v);
    left.erase(it);
    std::erase_if(edges, [&](const Edge& e) { return e.first == v; });
  }
  return order;
}

}  // namespace arithgraph
