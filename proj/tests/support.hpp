#pragma once

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "beireg/blocks.hpp"
#include "beireg/canonical.hpp"
#include "beireg/constructions.hpp"
#include "beireg/graph.hpp"
#include "beireg/graph_io.hpp"

namespace testing_support {

using namespace beireg;

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  return {std::istreambuf_iterator<char>(f), {}};
}

inline Graph paper_graph_from_file() { return parse_edge_list(read_file(std::string(BEIREG_FIXTURES) + "/paper_example.edges")); }

/// Uniformly random labelled graph with edge probability num/den.
inline Graph random_graph(SeededRng& rng, int n, int num, int den) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rng.chance(num, den)) g.add_edge(a, b);
  return g;
}

inline std::vector<Vertex> random_permutation(SeededRng& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.uniform(0, i))]);
  return p;
}

inline std::vector<Vertex> members(unsigned mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 32; ++v)
    if ((mask >> v) & 1u) out.push_back(v);
  return out;
}

inline int component_count(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

/// Cut vertices by deletion.
inline std::vector<Vertex> brute_cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  const int base = component_count(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (component_count(g.without_vertex(v)) > base) out.push_back(v);
  return out;
}

/// Blocks as maximal vertex sets (size >= 2) inducing a connected subgraph
/// without a cut vertex. Exponential; n <= 12.
inline std::vector<std::vector<Vertex>> brute_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<unsigned> good;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    const auto vs = members(mask);
    const Graph h = g.induced(vs);
    if (!is_connected(h)) continue;
    bool two_connected = true;
    if (vs.size() > 2)
      for (Vertex v = 0; v < h.vertex_count() && two_connected; ++v) two_connected = is_connected(h.without_vertex(v));
    if (two_connected) good.push_back(mask);
  }
  std::vector<std::vector<Vertex>> out;
  for (unsigned m : good) {
    const bool maximal = std::none_of(good.begin(), good.end(), [&](unsigned o) { return o != m && (m & ~o) == 0; });
    if (maximal) out.push_back(members(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Longest induced path by subset enumeration.
inline int brute_longest_induced_path(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k - 1 <= best) continue;
    const Graph h = g.induced(members(mask));
    if (!is_connected(h) || static_cast<int>(h.edge_count()) != k - 1) continue;
    bool path = true;
    for (Vertex v = 0; v < k && path; ++v) path = h.degree(v) <= 2;
    if (path) best = k - 1;
  }
  return best;
}

/// Every labelled tree on n vertices from its Prüfer sequence.
template <typename F>
void for_each_pruefer_tree(int n, F&& visit) {
  if (n == 1) {
    visit(Graph(1));
    return;
  }
  if (n == 2) {
    visit(Graph(2, {{0, 1}}));
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    Graph t(n);
    for (int x : seq) {
      Vertex leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      t.add_edge(leaf, x);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(x)];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
    t.add_edge(last[0], last[1]);
    visit(t);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

/// A few small block graphs exercising every recognized form.
inline std::vector<Graph> small_block_graphs() {
  std::vector<Graph> out{complete_graph(2), complete_graph(3), path_graph(4), star_graph(3), flower_graph(1, 1),
                         star_of_cliques({3, 3}), star_of_cliques({3, 4}), glue({{complete_graph(3), 0}, {path_graph(3), 0}})};
  SeededRng rng(7);
  for (int i = 0; i < 6; ++i) out.push_back(random_block_graph(rng, {4, 7, 40, 4}));
  return out;
}

}  // namespace testing_support
