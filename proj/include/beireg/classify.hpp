#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "beireg/blocks.hpp"
#include "beireg/graph.hpp"

namespace beireg {

enum class SpecialKind { None, Path, Caterpillar, StarOfCliques, Flower };

struct SpecialForm {
  SpecialKind kind = SpecialKind::None;
  int k = 0;  // star-of-cliques: number of cliques; flower: number of stars
  int h = 0;  // flower: number of triangles

  friend bool operator==(const SpecialForm&, const SpecialForm&) = default;
};

struct GraphClass {
  bool is_connected = false;
  bool is_tree = false;
  bool is_block_graph = false;
  bool large_blocks_all_end_blocks = false;
  bool is_caterpillar = false;
  SpecialForm special;
};

inline std::string to_string(const SpecialForm& f) {
  switch (f.kind) {
    case SpecialKind::Path: return "path";
    case SpecialKind::Caterpillar: return "caterpillar";
    case SpecialKind::StarOfCliques: return "starOfCliques(" + std::to_string(f.k) + ")";
    case SpecialKind::Flower: return "flower(" + std::to_string(f.h) + "," + std::to_string(f.k) + ")";
    case SpecialKind::None: break;
  }
  return "none";
}

/// Short label used in reports, e.g. "tree:caterpillar" or "block:flower(1,1)".
inline std::string summary(const GraphClass& c) {
  std::string base = c.is_tree ? "tree" : c.is_block_graph ? "block" : c.is_connected ? "graph" : "disconnected";
  return base + ":" + to_string(c.special);
}

/// Length (in edges) of a longest path in a tree, by double BFS.
inline int tree_diameter(const Graph& t) {
  if (t.vertex_count() <= 1) return 0;
  const Vertex start[] = {0};
  auto d0 = bfs_distances(t, start);
  const Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  const Vertex second[] = {far};
  auto d1 = bfs_distances(t, second);
  return *std::max_element(d1.begin(), d1.end());
}

inline bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

/// A tree whose non-leaf vertices induce a path (or nothing).
inline bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) inner.push_back(v);
  if (inner.empty()) return true;
  return is_path_graph(g.induced(inner));
}

namespace detail {

inline std::optional<SpecialForm> match_star_of_cliques(const BlockDecomposition& d) {
  if (d.block_count() < 2) return std::nullopt;
  for (const auto& b : d.blocks)
    if (b.size() < 3) return std::nullopt;
  for (Vertex v : d.cut_vertices)
    if (d.blocks_of_vertex[static_cast<std::size_t>(v)].size() == d.block_count())
      return SpecialForm{SpecialKind::StarOfCliques, static_cast<int>(d.block_count()), 0};
  return std::nullopt;
}

inline std::optional<SpecialForm> match_flower(const Graph& g, const BlockDecomposition& d) {
  auto bd = [&](Vertex v) { return d.bd[static_cast<std::size_t>(v)]; };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int h = 0;
    int k = 0;
    bool ok = true;
    for (int bi : d.blocks_of_vertex[static_cast<std::size_t>(v)]) {
      const auto& block = d.blocks[static_cast<std::size_t>(bi)];
      if (block.size() == 3) {
        ok = std::all_of(block.begin(), block.end(), [&](Vertex w) { return w == v || bd(w) == 1; });
        ++h;
      } else if (block.size() == 2) {
        const Vertex c = block[0] == v ? block[1] : block[0];
        ok = bd(c) == 3 && g.degree(c) == 3;
        for (Vertex w : g.neighbors(c))
          if (w != v && g.degree(w) != 1) ok = false;
        ++k;
      } else {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok && k >= 1 && g.vertex_count() == 1 + 2 * h + 3 * k) return SpecialForm{SpecialKind::Flower, k, h};
  }
  return std::nullopt;
}

}  // namespace detail

/// Structural flags plus the most specific recognized closed-form family
/// (path before caterpillar before flower before star of cliques).
inline GraphClass classify(const Graph& g) {
  GraphClass c;
  if (g.vertex_count() == 0) return c;
  c.is_connected = is_connected(g);
  const BlockDecomposition d = block_decomposition_any(g);
  c.is_block_graph = c.is_connected && all_blocks_complete(g, d);
  c.large_blocks_all_end_blocks = large_blocks_are_end_blocks(d);
  c.is_tree = is_tree(g);
  c.is_caterpillar = is_caterpillar(g);
  if (!c.is_connected || !c.is_block_graph) return c;
  if (is_path_graph(g)) {
    c.special = {SpecialKind::Path, 0, 0};
  } else if (c.is_caterpillar) {
    c.special = {SpecialKind::Caterpillar, 0, 0};
  } else if (auto f = detail::match_flower(g, d)) {
    c.special = *f;
  } else if (auto s = detail::match_star_of_cliques(d)) {
    c.special = *s;
  }
  return c;
}

inline constexpr int kInducedPathLimit = 20;

/// Maximum number of edges of an induced path, by exhaustive extension.
inline int longest_induced_path(const Graph& g, int limit = kInducedPathLimit) {
  const int n = g.vertex_count();
  if (n > limit)
    throw UnsupportedError("longest induced path is brute force; n=" + std::to_string(n) + " exceeds " +
                           std::to_string(limit));
  if (n == 0) return 0;
  int best = 0;
  std::vector<Vertex> path;
  std::vector<int> blocked(static_cast<std::size_t>(n), 0);  // #path vertices adjacent or equal
  auto extend = [&](auto&& self) -> void {
    best = std::max(best, static_cast<int>(path.size()) - 1);
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      // w may touch only `last` among the path vertices.
      if (blocked[static_cast<std::size_t>(w)] != 1) continue;
      path.push_back(w);
      ++blocked[static_cast<std::size_t>(w)];
      for (Vertex x : g.neighbors(w)) ++blocked[static_cast<std::size_t>(x)];
      self(self);
      for (Vertex x : g.neighbors(w)) --blocked[static_cast<std::size_t>(x)];
      --blocked[static_cast<std::size_t>(w)];
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    ++blocked[static_cast<std::size_t>(s)];
    for (Vertex x : g.neighbors(s)) ++blocked[static_cast<std::size_t>(x)];
    extend(extend);
    for (Vertex x : g.neighbors(s)) --blocked[static_cast<std::size_t>(x)];
    --blocked[static_cast<std::size_t>(s)];
  }
  return best;
}

}  // namespace beireg
