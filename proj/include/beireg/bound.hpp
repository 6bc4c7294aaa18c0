#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "beireg/blocks.hpp"
#include "beireg/canonical.hpp"
#include "beireg/classify.hpp"
#include "beireg/graph.hpp"

namespace beireg {

/// A maximum-length path all of whose edges are bridges.
struct Spine {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  bool contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

  bool has_edge(Vertex a, Vertex b) const {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
      if (make_edge(vertices[i], vertices[i + 1]) == make_edge(a, b)) return true;
    return false;
  }

  friend bool operator==(const Spine&, const Spine&) = default;
};

/// Which off-spine edges count towards e2.
enum class E2Variant {
  BridgesOnly,  // only bridges with both ends of block degree <= 2
  Literal,      // every edge with both ends of block degree <= 2
};

enum class SpinePolicy { MaxOverSpines, MinOverSpines, Canonical };

inline std::string to_string(E2Variant v) { return v == E2Variant::BridgesOnly ? "bridgesOnly" : "literal"; }

inline std::string to_string(SpinePolicy p) {
  switch (p) {
    case SpinePolicy::MaxOverSpines: return "maxOverSpines";
    case SpinePolicy::MinOverSpines: return "minOverSpines";
    case SpinePolicy::Canonical: return "canonical";
  }
  return "?";
}

struct CutContribution {
  Vertex v;
  int bd;
  int lbd;
  int contribution;  // max(lbd, 2)

  friend bool operator==(const CutContribution&, const CutContribution&) = default;
};

/// Every quantity entering the combinatorial bound for one spine.
struct BoundCertificate {
  Spine spine;
  int e2 = 0;
  E2Variant e2_variant = E2Variant::BridgesOnly;
  /// Large end-blocks meeting the spine.
  int b = 0;
  /// Off-spine vertices of block degree >= 3.
  std::vector<CutContribution> c_set;
  /// Hop distance of every vertex from the spine.
  std::vector<int> dist_to_spine;
  int bound = 0;
  SpinePolicy policy = SpinePolicy::MaxOverSpines;

  int ell() const { return spine.length(); }

  int c_sum() const {
    int s = 0;
    for (const auto& c : c_set) s += c.contribution;
    return s;
  }
};

namespace detail {

inline void require_block_graph(const Graph& g, const BlockDecomposition& d) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  for (const auto& block : d.blocks) {
    if (!g.is_clique(block)) {
      std::string msg = "not a block graph: block {";
      for (std::size_t i = 0; i < block.size(); ++i) msg += (i ? "," : "") + std::to_string(block[i] + 1);
      throw PreconditionError(msg + "} is not complete");
    }
  }
}

inline std::string block_name(const std::vector<Vertex>& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + std::to_string(block[i] + 1);
  return s + "}";
}

/// All maximum-length simple paths in a forest given by adjacency lists,
/// one orientation each (first endpoint smaller), sorted.
inline std::vector<std::vector<Vertex>> longest_forest_paths(const std::vector<std::vector<Vertex>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<Vertex>> best;
  int best_len = 0;
  std::vector<Vertex> path;
  std::function<void(Vertex, Vertex)> walk = [&](Vertex v, Vertex parent) {
    path.push_back(v);
    const int len = static_cast<int>(path.size()) - 1;
    if (len > best_len) {
      best_len = len;
      best.clear();
    }
    if (len == best_len && len > 0 && path.front() < path.back()) best.push_back(path);
    for (Vertex w : adj[static_cast<std::size_t>(v)])
      if (w != parent) walk(w, v);
    path.pop_back();
  };
  for (Vertex s = 0; s < n; ++s) walk(s, -1);
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace detail

/// Every maximum-length bridge path, up to reversal, in lexicographic
/// order. Empty when the graph has no bridge.
inline std::vector<Spine> find_spines(const Graph& g, const BlockDecomposition& d) {
  detail::require_block_graph(g, d);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : d.bridges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<Spine> out;
  for (auto& p : detail::longest_forest_paths(adj)) out.push_back(Spine{std::move(p)});
  return out;
}

inline std::vector<Spine> find_spines(const Graph& g) { return find_spines(g, block_decomposition(g)); }

/// Throws unless g is a connected block graph whose large blocks are all
/// end-blocks.
inline void check_bound_hypothesis(const Graph& g, const BlockDecomposition& d) {
  detail::require_block_graph(g, d);
  for (std::size_t b = 0; b < d.block_count(); ++b)
    if (d.is_large(b) && !d.is_end_block(b))
      throw PreconditionError("large block " + detail::block_name(d.blocks[b]) + " has " +
                              std::to_string(d.cut_vertices_of_block[b].size()) + " cut vertices; not an end-block");
}

inline BoundCertificate bound_certificate(const Graph& g, const BlockDecomposition& d, const Spine& spine,
                                          E2Variant variant = E2Variant::BridgesOnly) {
  check_bound_hypothesis(g, d);
  if (spine.length() < 1) throw PreconditionError("spine must have length at least 1");
  for (std::size_t i = 0; i + 1 < spine.vertices.size(); ++i)
    if (!d.is_bridge(spine.vertices[i], spine.vertices[i + 1]))
      throw PreconditionError("spine edge " + std::to_string(spine.vertices[i] + 1) + "-" +
                              std::to_string(spine.vertices[i + 1] + 1) + " is not a bridge");
  const auto spines = find_spines(g, d);
  if (spines.empty() || spines.front().length() != spine.length())
    throw PreconditionError("path of length " + std::to_string(spine.length()) + " is not a maximum-length spine");

  auto bd = [&](Vertex v) { return d.bd[static_cast<std::size_t>(v)]; };
  BoundCertificate c;
  c.spine = spine;
  c.e2_variant = variant;
  for (const Edge& e : g.edges()) {
    if (spine.has_edge(e.u, e.v) || bd(e.u) > 2 || bd(e.v) > 2) continue;
    if (variant == E2Variant::Literal || d.is_bridge(e.u, e.v)) ++c.e2;
  }
  for (std::size_t b = 0; b < d.block_count(); ++b) {
    if (!d.is_large(b) || !d.is_end_block(b)) continue;
    const auto& block = d.blocks[b];
    if (std::any_of(block.begin(), block.end(), [&](Vertex v) { return spine.contains(v); })) ++c.b;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (spine.contains(v) || bd(v) < 3) continue;
    const int lbd = d.lbd[static_cast<std::size_t>(v)];
    c.c_set.push_back({v, bd(v), lbd, std::max(lbd, 2)});
  }
  c.dist_to_spine = bfs_distances(g, spine.vertices);
  c.bound = c.e2 + c.ell() + c.b + c.c_sum();
  return c;
}

inline BoundCertificate bound_certificate(const Graph& g, const Spine& spine,
                                          E2Variant variant = E2Variant::BridgesOnly) {
  return bound_certificate(g, block_decomposition(g), spine, variant);
}

/// Bound over all spines, reduced by a policy.
struct TheoremBound {
  int bound = 0;
  std::vector<BoundCertificate> certificates;
  /// Index of the certificate the policy picked; -1 for the closed form.
  int selected = -1;
  bool from_closed_form = false;
  SpinePolicy policy = SpinePolicy::MaxOverSpines;
  E2Variant e2_variant = E2Variant::BridgesOnly;

  int max_bound() const {
    int m = bound;
    for (const auto& c : certificates) m = std::max(m, c.bound);
    return certificates.empty() ? bound : m;
  }

  int min_bound() const {
    if (certificates.empty()) return bound;
    int m = certificates.front().bound;
    for (const auto& c : certificates) m = std::min(m, c.bound);
    return m;
  }
};

namespace detail {

/// Index of the spine whose canonically relabelled, oriented vertex
/// sequence is lexicographically smallest.
inline int canonical_spine_index(const Graph& g, const std::vector<Spine>& spines) {
  const auto perm = canonical_labeling(g);
  int best = -1;
  std::vector<Vertex> best_seq;
  for (std::size_t i = 0; i < spines.size(); ++i) {
    std::vector<Vertex> seq;
    for (Vertex v : spines[i].vertices) seq.push_back(perm[static_cast<std::size_t>(v)]);
    std::vector<Vertex> rev(seq.rbegin(), seq.rend());
    seq = std::min(seq, rev);
    if (best < 0 || seq < best_seq) {
      best = static_cast<int>(i);
      best_seq = std::move(seq);
    }
  }
  return best;
}

inline int select_by_policy(const Graph& g, const std::vector<Spine>& spines, const std::vector<int>& values,
                            SpinePolicy policy) {
  switch (policy) {
    case SpinePolicy::MaxOverSpines:
      return static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
    case SpinePolicy::MinOverSpines:
      return static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
    case SpinePolicy::Canonical: return canonical_spine_index(g, spines);
  }
  return 0;
}

}  // namespace detail

inline TheoremBound theorem_bound(const Graph& g, E2Variant variant = E2Variant::BridgesOnly,
                                  SpinePolicy policy = SpinePolicy::MaxOverSpines) {
  const BlockDecomposition d = block_decomposition(g);
  check_bound_hypothesis(g, d);
  TheoremBound out;
  out.policy = policy;
  out.e2_variant = variant;
  const auto spines = find_spines(g, d);
  if (spines.empty()) {
    const GraphClass cls = classify(g);
    if (cls.special.kind != SpecialKind::StarOfCliques)
      throw PreconditionError("graph has no bridge and is not a star of cliques; the bound does not apply");
    out.bound = cls.special.k;
    out.from_closed_form = true;
    return out;
  }
  std::vector<int> values;
  for (const auto& s : spines) {
    out.certificates.push_back(bound_certificate(g, d, s, variant));
    out.certificates.back().policy = policy;
    values.push_back(out.certificates.back().bound);
  }
  out.selected = detail::select_by_policy(g, spines, values, policy);
  out.bound = values[static_cast<std::size_t>(out.selected)];
  return out;
}

/// Tree form of the bound, computed from vertex degrees alone:
/// e2 + ell + 2 * d3 for each longest path of the tree.
inline TheoremBound tree_bound(const Graph& t, SpinePolicy policy = SpinePolicy::MaxOverSpines) {
  if (!is_tree(t) || t.vertex_count() < 2) throw PreconditionError("tree_bound needs a tree with at least 2 vertices");
  const auto paths = detail::longest_forest_paths(detail::adjacency_lists(t));
  TheoremBound out;
  out.policy = policy;
  std::vector<Spine> spines;
  std::vector<int> values;
  for (const auto& p : paths) {
    BoundCertificate c;
    c.spine = Spine{p};
    c.policy = policy;
    for (const Edge& e : t.edges())
      if (!c.spine.has_edge(e.u, e.v) && t.degree(e.u) <= 2 && t.degree(e.v) <= 2) ++c.e2;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
      if (!c.spine.contains(v) && t.degree(v) >= 3) c.c_set.push_back({v, t.degree(v), 0, 2});
    c.dist_to_spine = bfs_distances(t, c.spine.vertices);
    c.bound = c.e2 + c.ell() + 2 * static_cast<int>(c.c_set.size());
    values.push_back(c.bound);
    spines.push_back(c.spine);
    out.certificates.push_back(std::move(c));
  }
  out.selected = detail::select_by_policy(t, spines, values, policy);
  out.bound = values[static_cast<std::size_t>(out.selected)];
  return out;
}

/// Exact regularity for the recognized families: paths (n - 1),
/// caterpillars (longest path), flowers (2k + h), stars of cliques (k).
inline std::optional<int> closed_form_reg(const Graph& g) {
  const GraphClass c = classify(g);
  switch (c.special.kind) {
    case SpecialKind::Path: return g.vertex_count() - 1;
    case SpecialKind::Caterpillar: return tree_diameter(g);
    case SpecialKind::Flower: return 2 * c.special.k + c.special.h;
    case SpecialKind::StarOfCliques: return c.special.k;
    case SpecialKind::None: break;
  }
  return std::nullopt;
}

struct BaselineBounds {
  int lower = 0;  // longest induced path
  int upper = 0;  // n - 1
  std::optional<int> clique_bound;  // number of blocks, for block graphs
};

inline BaselineBounds baseline_bounds(const Graph& g) {
  BaselineBounds b;
  b.lower = longest_induced_path(g);
  b.upper = std::max(0, g.vertex_count() - 1);
  if (g.vertex_count() > 0 && is_block_graph(g)) b.clique_bound = static_cast<int>(block_decomposition(g).block_count());
  return b;
}

}  // namespace beireg
