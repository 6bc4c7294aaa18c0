#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "beireg/blocks.hpp"
#include "beireg/graph.hpp"

namespace beireg {

/// A graph together with the vertex at which it is glued.
struct GluePart {
  Graph graph;
  Vertex at;
};

/// Disjoint union of the parts with every designated vertex identified.
/// The identified vertex becomes 0; the remaining vertices follow part by
/// part, each part in its own vertex order.
inline Graph glue(const std::vector<GluePart>& parts) {
  if (parts.empty()) throw PreconditionError("glue needs at least one part");
  int n = 1;
  for (const auto& p : parts) {
    if (!p.graph.valid(p.at))
      throw PreconditionError("glue vertex " + std::to_string(p.at + 1) + " outside its part");
    n += p.graph.vertex_count() - 1;
  }
  Graph out(n);
  int next = 1;
  for (const auto& p : parts) {
    std::vector<Vertex> map(static_cast<std::size_t>(p.graph.vertex_count()));
    for (Vertex v = 0; v < p.graph.vertex_count(); ++v) map[static_cast<std::size_t>(v)] = v == p.at ? 0 : next++;
    for (const Edge& e : p.graph.edges()) out.add_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

/// The three graphs of the short exact sequence attached to a non-free
/// vertex: G' completes N(v) to a clique, G'' = G \ v, H = G' \ v.
struct OhtaniTriple {
  Graph g_prime;
  Graph g_double_prime;
  Graph h;
  Vertex pivot;
  /// Vertex i of g_double_prime and h is remaining[i] of the source graph.
  std::vector<Vertex> remaining;
};

inline OhtaniTriple ohtani_triple(const Graph& g, Vertex v) {
  if (!g.valid(v)) throw PreconditionError("pivot out of range");
  const auto& nbrs = g.neighbors(v);
  if (g.is_clique(nbrs)) {
    std::string clique = "{" + std::to_string(v + 1);
    for (Vertex w : nbrs) clique += "," + std::to_string(w + 1);
    throw PreconditionError("vertex " + std::to_string(v + 1) + " is free: it lies only in the maximal clique " +
                            clique + "}");
  }
  OhtaniTriple t;
  t.pivot = v;
  t.g_prime = g;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) t.g_prime.ensure_edge(nbrs[i], nbrs[j]);
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (w != v) t.remaining.push_back(w);
  t.g_double_prime = g.induced(t.remaining);
  t.h = t.g_prime.induced(t.remaining);
  return t;
}

/// F_{h,k}(v): h triangles and k copies of K_{1,3}, glued at a free vertex
/// of each. v is vertex 0; each star contributes (center, leaf, leaf).
inline Graph flower_graph(int h, int k) {
  if (h < 0 || k < 1) throw PreconditionError("flower needs h >= 0 and k >= 1");
  std::vector<GluePart> parts;
  for (int i = 0; i < h; ++i) parts.push_back({complete_graph(3), 0});
  for (int i = 0; i < k; ++i) parts.push_back({star_graph(3), 1});
  return glue(parts);
}

/// k cliques of the given sizes sharing vertex 0.
inline Graph star_of_cliques(const std::vector<int>& sizes) {
  std::vector<GluePart> parts;
  for (int s : sizes) {
    if (s < 2) throw PreconditionError("clique size must be at least 2");
    parts.push_back({complete_graph(s), 0});
  }
  return glue(parts);
}

/// Path on spine_length + 1 vertices with legs[i] pendant leaves on the
/// (i+1)-th interior spine vertex.
inline Graph caterpillar_graph(int spine_length, const std::vector<int>& legs) {
  if (spine_length < 1) throw PreconditionError("caterpillar spine length must be at least 1");
  if (legs.size() > static_cast<std::size_t>(std::max(0, spine_length - 1)))
    throw PreconditionError("caterpillar has only " + std::to_string(std::max(0, spine_length - 1)) +
                            " interior spine vertices");
  int n = spine_length + 1;
  for (int l : legs) n += l;
  Graph g(n);
  for (Vertex a = 0; a < spine_length; ++a) g.add_edge(a, a + 1);
  Vertex next = spine_length + 1;
  for (std::size_t i = 0; i < legs.size(); ++i)
    for (int j = 0; j < legs[i]; ++j) g.add_edge(static_cast<Vertex>(i + 1), next++);
  return g;
}

/// Spider: one center with legs of the given lengths.
inline Graph spider_graph(const std::vector<int>& leg_lengths) {
  int n = 1;
  for (int l : leg_lengths) n += l;
  Graph g(n);
  Vertex next = 1;
  for (int l : leg_lengths) {
    Vertex prev = 0;
    for (int i = 0; i < l; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

/// Deterministic bounded draws on top of mt19937_64 (whose output sequence
/// is fixed by the standard, unlike the std distributions).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  /// True with probability num/den.
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

struct RandomBlockGraphParams {
  int min_n = 3;
  int max_n = 8;
  /// Percent chance that an attached block is a clique of size >= 3.
  int large_block_percent = 35;
  int max_clique = 4;
};

/// Random connected block graph in which every clique of size >= 3 is an
/// end-block. The first block is always a bridge, so a spine exists.
inline Graph random_block_graph(SeededRng& rng, const RandomBlockGraphParams& params = {}) {
  const int target = rng.uniform(params.min_n, params.max_n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  // owner[v]: large block containing v as a non-cut candidate, or -1.
  std::vector<int> owner{-1};
  std::vector<Vertex> block_cut;  // per large block: its cut vertex, or -1
  int n = 1;
  bool first = true;
  while (n < target) {
    std::vector<Vertex> anchors;
    for (Vertex v = 0; v < n; ++v) {
      const int b = owner[static_cast<std::size_t>(v)];
      if (b < 0 || block_cut[static_cast<std::size_t>(b)] < 0 || block_cut[static_cast<std::size_t>(b)] == v)
        anchors.push_back(v);
    }
    const Vertex at = anchors[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(anchors.size()) - 1))];
    int size = 2;
    const int room = target - n + 1;
    if (!first && room >= 3 && rng.chance(params.large_block_percent, 100))
      size = rng.uniform(3, std::min(params.max_clique, room));
    first = false;
    if (const int b = owner[static_cast<std::size_t>(at)]; b >= 0) block_cut[static_cast<std::size_t>(b)] = at;
    std::vector<Vertex> members{at};
    const int block_id = size >= 3 ? static_cast<int>(block_cut.size()) : -1;
    // `at` already lies in an earlier block, so it is the new block's cut vertex.
    if (size >= 3) block_cut.push_back(at);
    for (int i = 1; i < size; ++i) {
      members.push_back(n++);
      owner.push_back(block_id);
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  }
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace beireg
