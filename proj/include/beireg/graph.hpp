#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beireg/error.hpp"

namespace beireg {

/// Vertices are stored 0-based; all text formats use labels 1..n.
using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted with u < v; adjacency lists are sorted as well, so
/// two graphs with the same edge set compare equal.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(n)) {
    if (n < 0) throw PreconditionError("vertex count must be non-negative");
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (!valid(a) || !valid(b) || a == b) return false;
    const auto& adj = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(adj.begin(), adj.end(), b);
  }

  bool valid(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// Adds the edge {a, b}; rejects loops, duplicates and out-of-range ends.
  void add_edge(Vertex a, Vertex b) {
    if (!valid(a) || !valid(b))
      throw PreconditionError("edge endpoint out of range: " + std::to_string(a + 1) + " " +
                              std::to_string(b + 1));
    if (a == b) throw PreconditionError("self-loop at vertex " + std::to_string(a + 1));
    if (has_edge(a, b))
      throw PreconditionError("duplicate edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
    const Edge e = make_edge(a, b);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
    auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
      list.insert(std::upper_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adjacency_[static_cast<std::size_t>(a)], b);
    insert_sorted(adjacency_[static_cast<std::size_t>(b)], a);
  }

  /// Adds {a, b} unless already present.
  void ensure_edge(Vertex a, Vertex b) {
    if (!has_edge(a, b)) add_edge(a, b);
  }

  bool is_clique(std::span<const Vertex> vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!has_edge(vs[i], vs[j])) return false;
    return true;
  }

  /// Subgraph induced on `keep` (in the given order); vertex i of the result
  /// is keep[i].
  Graph induced(std::span<const Vertex> keep) const {
    std::vector<int> index(adjacency_.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    Graph out(static_cast<int>(keep.size()));
    for (const Edge& e : edges_) {
      const int a = index[static_cast<std::size_t>(e.u)];
      const int b = index[static_cast<std::size_t>(e.v)];
      if (a >= 0 && b >= 0) out.add_edge(a, b);
    }
    return out;
  }

  /// G \ {v}; remaining vertices keep their relative order.
  Graph without_vertex(Vertex v) const {
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < vertex_count(); ++w)
      if (w != v) keep.push_back(w);
    return induced(keep);
  }

  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    Graph out(vertex_count());
    for (const Edge& e : edges_) out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && is_connected(g) &&
         g.edge_count() == static_cast<std::size_t>(g.vertex_count() - 1);
}

/// Hop distances from a set of sources; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[static_cast<std::size_t>(s)] < 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Disjoint union; vertices of `b` are shifted past those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.vertex_count(), e.v + a.vertex_count());
  return out;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (Vertex a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

/// K_{1,leaves} with the center at vertex 0.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex a = 1; a <= leaves; ++a) g.add_edge(0, a);
  return g;
}

}  // namespace beireg
