#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "beireg/blocks.hpp"
#include "beireg/graph.hpp"

namespace beireg {

inline constexpr int kBruteForceIsoLimit = 10;
inline constexpr int kTreeEnumerationLimit = 12;

namespace detail {

/// Canonical code of an unrooted, node-labelled tree: root at the center
/// (or the better of the two centers), sort child codes.
class RootedCanon {
 public:
  RootedCanon(const std::vector<std::vector<int>>& adj, std::vector<std::string> labels)
      : adj_(adj), labels_(std::move(labels)) {
    const auto centers = tree_centers();
    std::string best;
    for (int c : centers) {
      std::string code = encode(c, -1);
      if (best.empty() || code < best) {
        best = std::move(code);
        root_ = c;
      }
    }
    code_ = std::move(best);
  }

  const std::string& code() const { return code_; }

  /// Nodes in canonical preorder together with their parent node.
  std::vector<std::pair<int, int>> preorder() const {
    std::vector<std::pair<int, int>> out;
    std::function<void(int, int)> walk = [&](int v, int parent) {
      out.emplace_back(v, parent);
      for (int c : sorted_children(v, parent)) walk(c, v);
    };
    walk(root_, -1);
    return out;
  }

 private:
  std::vector<int> tree_centers() const {
    const int n = static_cast<int>(adj_.size());
    if (n <= 2) {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
      deg[static_cast<std::size_t>(v)] = static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
      if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
      remaining -= static_cast<int>(layer.size());
      std::vector<int> next;
      for (int v : layer)
        for (int w : adj_[static_cast<std::size_t>(v)])
          if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
  }

  std::string encode(int v, int parent) const {
    std::vector<std::string> kids;
    for (int w : adj_[static_cast<std::size_t>(v)])
      if (w != parent) kids.push_back(encode(w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = labels_[static_cast<std::size_t>(v)] + "(";
    for (const auto& k : kids) out += k;
    return out + ")";
  }

  std::vector<int> sorted_children(int v, int parent) const {
    std::vector<std::pair<std::string, int>> kids;
    for (int w : adj_[static_cast<std::size_t>(v)])
      if (w != parent) kids.emplace_back(encode(w, v), w);
    std::sort(kids.begin(), kids.end());
    std::vector<int> out;
    for (auto& k : kids) out.push_back(k.second);
    return out;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<std::string> labels_;
  std::string code_;
  int root_ = 0;
};

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  return adj;
}

/// Block-cut tree: nodes 0..B-1 are blocks, B.. are cut vertices.
struct BlockCutTree {
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;
  std::size_t block_nodes = 0;
};

inline BlockCutTree block_cut_tree(const BlockDecomposition& d) {
  BlockCutTree t;
  t.block_nodes = d.block_count();
  t.adj.assign(d.block_count() + d.cut_vertices.size(), {});
  for (std::size_t b = 0; b < d.block_count(); ++b) t.labels.push_back("b" + std::to_string(d.blocks[b].size()));
  for (std::size_t i = 0; i < d.cut_vertices.size(); ++i) {
    t.labels.push_back("c");
    const int node = static_cast<int>(d.block_count() + i);
    for (int b : d.blocks_of_vertex[static_cast<std::size_t>(d.cut_vertices[i])]) {
      t.adj[static_cast<std::size_t>(node)].push_back(b);
      t.adj[static_cast<std::size_t>(b)].push_back(node);
    }
  }
  return t;
}

inline std::string brute_force_code(const Graph& g) {
  const int n = g.vertex_count();
  // Order vertices by degree; only permute within equal-degree groups.
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::string best;
  std::string bits(static_cast<std::size_t>(n * (n - 1) / 2), '0');
  std::function<void(std::size_t)> search = [&](std::size_t gi) {
    if (gi == groups.size()) {
      std::size_t k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits[k++] = g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? '1' : '0';
      if (best.empty() || bits > best) best = bits;
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(groups[gi].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(groups[gi].second);
    std::sort(first, last);
    do {
      search(gi + 1);
    } while (std::next_permutation(first, last));
  };
  search(0);
  std::string degrees;
  for (Vertex v : order) degrees += std::to_string(g.degree(v)) + ".";
  return "G" + std::to_string(n) + ":" + degrees + ":" + best;
}

}  // namespace detail

/// Relabelling that maps isomorphic trees or connected block graphs to the
/// identical labelled graph: perm[v] is the new label of v.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> perm(static_cast<std::size_t>(n), -1);
  if (n == 0) return perm;
  if (is_tree(g)) {
    const auto adj = detail::adjacency_lists(g);
    detail::RootedCanon canon(adj, std::vector<std::string>(static_cast<std::size_t>(n)));
    Vertex next = 0;
    for (auto [v, parent] : canon.preorder()) perm[static_cast<std::size_t>(v)] = next++;
    return perm;
  }
  if (!is_block_graph(g)) throw UnsupportedError("canonical labeling needs a tree or a connected block graph");
  const BlockDecomposition d = block_decomposition(g);
  const auto bct = detail::block_cut_tree(d);
  detail::RootedCanon canon(bct.adj, bct.labels);
  Vertex next = 0;
  for (auto [node, parent] : canon.preorder()) {
    if (static_cast<std::size_t>(node) < bct.block_nodes) {
      for (Vertex v : d.blocks[static_cast<std::size_t>(node)])
        if (!d.is_cut_vertex(v)) perm[static_cast<std::size_t>(v)] = next++;
    } else {
      perm[static_cast<std::size_t>(d.cut_vertices[static_cast<std::size_t>(node) - bct.block_nodes])] = next++;
    }
  }
  return perm;
}

inline Graph canonical_form(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

/// Isomorphism-invariant key. Trees use the center-rooted subtree code,
/// connected block graphs the code of their block-cut tree with block
/// sizes, other graphs with n <= 10 a brute-force minimum adjacency code.
inline std::string canonical_encode(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return "E";
  if (is_tree(g)) {
    const auto adj = detail::adjacency_lists(g);
    return "T" + detail::RootedCanon(adj, std::vector<std::string>(static_cast<std::size_t>(n))).code();
  }
  if (is_block_graph(g)) {
    const auto bct = detail::block_cut_tree(block_decomposition(g));
    return "B" + detail::RootedCanon(bct.adj, bct.labels).code();
  }
  if (n <= kBruteForceIsoLimit) return detail::brute_force_code(g);
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    std::vector<std::string> parts;
    for (const auto& c : comps) parts.push_back(canonical_encode(g.induced(c)));
    std::sort(parts.begin(), parts.end());
    std::string out = "U";
    for (const auto& p : parts) out += "{" + p + "}";
    return out;
  }
  throw UnsupportedError("canonical encoding of a general graph needs n <= " + std::to_string(kBruteForceIsoLimit) +
                         " (n=" + std::to_string(n) + ")");
}

/// One canonically labelled tree per isomorphism class on n vertices,
/// ordered by canonical code.
inline std::vector<Graph> enumerate_trees(int n, int limit = kTreeEnumerationLimit) {
  if (n < 1) throw PreconditionError("tree enumeration needs n >= 1");
  if (n > limit)
    throw UnsupportedError("tree enumeration limited to n <= " + std::to_string(limit) + " (n=" + std::to_string(n) + ")");
  std::map<std::string, Graph> level{{canonical_encode(Graph(1)), Graph(1)}};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        Graph grown(size);
        for (const Edge& e : t.edges()) grown.add_edge(e.u, e.v);
        grown.add_edge(v, size - 1);
        auto key = canonical_encode(grown);
        if (!next.contains(key)) next.emplace(std::move(key), canonical_form(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

}  // namespace beireg
