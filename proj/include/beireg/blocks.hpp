#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "beireg/graph.hpp"

namespace beireg {

/// Blocks (maximal pieces without a cut vertex) of a connected graph,
/// together with the block-cut incidence and the block-degree counts.
struct BlockDecomposition {
  /// Sorted vertex lists, ordered lexicographically.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
  /// Blocks with exactly two vertices.
  std::vector<Edge> bridges;
  /// bd[v]: number of blocks containing v (defined for every vertex).
  std::vector<int> bd;
  /// lbd[v]: number of blocks of size >= 3 containing v.
  std::vector<int> lbd;
  /// Block-cut tree as incidence lists in both directions.
  std::vector<std::vector<int>> blocks_of_vertex;
  std::vector<std::vector<Vertex>> cut_vertices_of_block;

  std::size_t block_count() const { return blocks.size(); }
  bool is_cut_vertex(Vertex v) const { return bd[static_cast<std::size_t>(v)] >= 2; }
  bool is_large(std::size_t block) const { return blocks[block].size() >= 3; }
  bool is_end_block(std::size_t block) const { return cut_vertices_of_block[block].size() <= 1; }

  bool is_bridge(Vertex a, Vertex b) const {
    return std::binary_search(bridges.begin(), bridges.end(), make_edge(a, b));
  }

  /// Index of the block containing edge {a, b}, or -1 if there is none.
  int block_of_edge(Vertex a, Vertex b) const {
    for (int x : blocks_of_vertex[static_cast<std::size_t>(a)])
      for (int y : blocks_of_vertex[static_cast<std::size_t>(b)])
        if (x == y && blocks[static_cast<std::size_t>(x)].size() >= 2) return x;
    return -1;
  }
};

namespace detail {

/// Biconnected components of an arbitrary graph; isolated vertices become
/// singleton blocks. Single depth-first pass with an edge stack.
inline std::vector<std::vector<Vertex>> biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int timer = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    if (g.degree(root) == 0) {
      blocks.push_back({root});
      continue;
    }
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Vertex v = f.v;
      const auto& adj = g.neighbors(v);
      if (f.next < adj.size()) {
        const Vertex w = adj[f.next++];
        const auto vi = static_cast<std::size_t>(v);
        const auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          edge_stack.push_back({v, w});
          disc[wi] = low[wi] = timer++;
          frames.push_back({w, v, 0});
        } else if (w != f.parent && disc[wi] < disc[vi]) {
          edge_stack.push_back({v, w});
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex u = frames.back().v;
      const auto ui = static_cast<std::size_t>(u);
      low[ui] = std::min(low[ui], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] >= disc[ui]) {
        std::vector<Vertex> block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == u && e.v == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline BlockDecomposition assemble(const Graph& g, std::vector<std::vector<Vertex>> blocks) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  BlockDecomposition d;
  d.blocks = std::move(blocks);
  d.bd.assign(n, 0);
  d.lbd.assign(n, 0);
  d.blocks_of_vertex.assign(n, {});
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (Vertex v : d.blocks[b]) {
      ++d.bd[static_cast<std::size_t>(v)];
      if (d.blocks[b].size() >= 3) ++d.lbd[static_cast<std::size_t>(v)];
      d.blocks_of_vertex[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
    }
    if (d.blocks[b].size() == 2) d.bridges.push_back(make_edge(d.blocks[b][0], d.blocks[b][1]));
  }
  std::sort(d.bridges.begin(), d.bridges.end());
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    if (d.bd[static_cast<std::size_t>(v)] >= 2) d.cut_vertices.push_back(v);
  d.cut_vertices_of_block.assign(d.blocks.size(), {});
  for (Vertex c : d.cut_vertices)
    for (int b : d.blocks_of_vertex[static_cast<std::size_t>(c)]) d.cut_vertices_of_block[static_cast<std::size_t>(b)].push_back(c);
  return d;
}

}  // namespace detail

/// Block decomposition of a connected graph.
inline BlockDecomposition block_decomposition(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("block decomposition of the empty graph");
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    std::string msg = "graph is disconnected; components:";
    for (const auto& c : comps) {
      msg += " {";
      for (std::size_t i = 0; i < c.size(); ++i) msg += (i ? "," : "") + std::to_string(c[i] + 1);
      msg += "}";
    }
    throw PreconditionError(msg);
  }
  return detail::assemble(g, detail::biconnected_blocks(g));
}

/// Decomposition of every component at once (isolated vertices are
/// singleton blocks). Used where the algebra accepts disconnected input.
inline BlockDecomposition block_decomposition_any(const Graph& g) {
  return detail::assemble(g, detail::biconnected_blocks(g));
}

inline bool all_blocks_complete(const Graph& g, const BlockDecomposition& d) {
  return std::all_of(d.blocks.begin(), d.blocks.end(), [&](const auto& b) { return g.is_clique(b); });
}

inline bool is_block_graph(const Graph& g) {
  return g.vertex_count() > 0 && is_connected(g) && all_blocks_complete(g, block_decomposition(g));
}

/// Every block of size >= 3 contains at most one cut vertex.
inline bool large_blocks_are_end_blocks(const BlockDecomposition& d) {
  for (std::size_t b = 0; b < d.block_count(); ++b)
    if (d.is_large(b) && !d.is_end_block(b)) return false;
  return true;
}

/// A vertex lies in exactly one maximal clique iff its closed neighborhood
/// is a clique.
inline bool is_free_vertex(const Graph& g, Vertex v) { return g.is_clique(g.neighbors(v)); }

}  // namespace beireg
