#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "beireg/graph.hpp"
#include "beireg/monomial_ideal.hpp"
#include "beireg/polynomial.hpp"

namespace beireg {

/// Variable index of x_v (0-based vertex v) in a ring with n vertices.
inline std::size_t x_var(Vertex v) { return static_cast<std::size_t>(v); }
inline std::size_t y_var(Vertex v, int n) { return static_cast<std::size_t>(n + v); }

/// Generators x_i y_j - x_j y_i (i < j) of the binomial edge ideal.
inline std::vector<Polynomial> edge_binomials(const Graph& g, const PrimeField& field) {
  const int n = g.vertex_count();
  const auto vars = static_cast<std::size_t>(2 * n);
  std::vector<Polynomial> out;
  for (const Edge& e : g.edges()) {
    Monomial lead(vars);
    lead[x_var(e.u)] = 1;
    lead[y_var(e.v, n)] = 1;
    Monomial trail(vars);
    trail[x_var(e.v)] = 1;
    trail[y_var(e.u, n)] = 1;
    out.emplace_back(std::vector<Term>{{1, lead}, {field.neg(1), trail}}, field);
  }
  return out;
}

/// Reduced Gröbner basis: monic elements sorted by decreasing leading
/// monomial.
struct GroebnerBasis {
  std::size_t variables = 0;
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::vector<Polynomial> elements;

  /// One polynomial per line, terms as coeff*monomial in lex order.
  std::string dump() const {
    std::ostringstream out;
    for (const auto& p : elements) out << p.to_string() << '\n';
    return out.str();
  }
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t zero_reductions = 0;
};

/// Full reduction of f modulo monic polynomials `basis` (skipping `skip`).
inline Polynomial reduce(Polynomial f, const std::vector<Polynomial>& basis, const PrimeField& field,
                         std::optional<std::size_t> skip = std::nullopt) {
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Term lt = f.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (skip && *skip == i) continue;
      const auto& g = basis[i];
      if (g.is_zero() || !g.leading_monomial().divides(lt.mono)) continue;
      f = f.minus_multiple(field.div(lt.coeff, g.leading().coeff), lt.mono / g.leading_monomial(), g, field);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      f = f.tail();
    }
  }
  return Polynomial(std::move(remainder), field);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PrimeField& field) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a = Polynomial().minus_multiple(field.neg(field.inv(f.leading().coeff)), l / f.leading_monomial(), f, field);
  return a.minus_multiple(field.inv(g.leading().coeff), l / g.leading_monomial(), g, field);
}

/// Buchberger's algorithm under lex with the normal selection strategy and
/// the product and chain criteria, followed by full interreduction.
inline GroebnerBasis buchberger_reduced_gb(const std::vector<Polynomial>& gens, const PrimeField& field,
                                           BuchbergerStats* stats = nullptr) {
  if (gens.empty()) throw PreconditionError("Buchberger needs at least one generator");
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  const std::size_t vars = gens.front().is_zero() ? 0 : gens.front().leading_monomial().variables();

  std::vector<Polynomial> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic(field));

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_index;
  auto add_pairs_for = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i) {
      pending.push_back({i, t, lcm(basis[i].leading_monomial(), basis[t].leading_monomial())});
      pending_index.emplace(i, t);
    }
  };
  for (std::size_t t = 0; t < basis.size(); ++t) add_pairs_for(t);
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending_index.contains({std::min(a, b), std::max(a, b)}); };

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm != b.lcm) return a.lcm < b.lcm;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    const Pair p = *it;
    pending.erase(it);
    pending_index.erase({p.i, p.j});
    ++st.pairs_considered;

    const auto& fi = basis[p.i];
    const auto& fj = basis[p.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) {
      ++st.product_criterion;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      chain = basis[k].leading_monomial().divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
    }
    if (chain) {
      ++st.chain_criterion;
      continue;
    }
    Polynomial r = reduce(s_polynomial(fi, fj, field), basis, field);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    basis.push_back(r.monic(field));
    add_pairs_for(basis.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (keeping the first of equal leading monomials).
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  std::vector<Polynomial> minimal;
  for (auto& f : basis) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& g) {
      return g.leading_monomial().divides(f.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(f));
  }
  // Interreduce tails.
  GroebnerBasis out;
  out.variables = vars;
  out.characteristic = field.characteristic();
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const Polynomial tail = reduce(minimal[i].tail(), minimal, field, i);
    std::vector<Term> terms{minimal[i].leading()};
    terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
    out.elements.emplace_back(std::move(terms), field);
  }
  std::sort(out.elements.begin(), out.elements.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() > b.leading_monomial();
  });
  return out;
}

/// True when every S-polynomial reduces to zero.
inline bool is_groebner_basis(const std::vector<Polynomial>& basis, const PrimeField& field) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j], field), basis, field).is_zero()) return false;
  return true;
}

/// Monic, and no leading monomial divides any term of another element.
inline bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    if (gb.elements[i].leading().coeff != 1) return false;
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.elements[j].terms())
        if (gb.elements[i].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

/// Ideal of leading monomials. A non-squarefree result is a hard error:
/// the regularity transfer to the initial ideal needs squarefreeness.
inline MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  for (const auto& p : gb.elements) leads.push_back(p.leading_monomial());
  MonomialIdeal ideal(gb.variables, std::move(leads));
  if (!ideal.squarefree())
    throw PreconditionError("initial ideal is not squarefree: " + ideal.to_string());
  return ideal;
}

/// In(J_T) for a tree T read off its paths: for i < j whose tree path has
/// all interior vertices outside [i, j], the monomial
/// x_i y_j * prod(x_k : interior k > j) * prod(y_k : interior k < i).
inline MonomialIdeal admissible_initial_ideal(const Graph& t) {
  if (!is_tree(t)) throw PreconditionError("admissible path ideal needs a tree");
  const int n = t.vertex_count();
  const auto vars = static_cast<std::size_t>(2 * n);
  std::vector<Monomial> gens;
  for (Vertex i = 0; i < n; ++i) {
    // Parent pointers of the BFS tree rooted at i give every i-j path.
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order{i};
    parent[static_cast<std::size_t>(i)] = i;
    for (std::size_t h = 0; h < order.size(); ++h)
      for (Vertex w : t.neighbors(order[h]))
        if (parent[static_cast<std::size_t>(w)] < 0) {
          parent[static_cast<std::size_t>(w)] = order[h];
          order.push_back(w);
        }
    for (Vertex j = i + 1; j < n; ++j) {
      Monomial m(vars);
      m[x_var(i)] = 1;
      m[y_var(j, n)] = 1;
      bool admissible = true;
      for (Vertex k = parent[static_cast<std::size_t>(j)]; k != i; k = parent[static_cast<std::size_t>(k)]) {
        if (k > j) {
          m[x_var(k)] = 1;
        } else if (k < i) {
          m[y_var(k, n)] = 1;
        } else {
          admissible = false;
          break;
        }
      }
      if (admissible) gens.push_back(std::move(m));
    }
  }
  return MonomialIdeal(vars, std::move(gens));
}

/// Lex Gröbner basis of J_G.
inline GroebnerBasis binomial_edge_gb(const Graph& g, const PrimeField& field, BuchbergerStats* stats = nullptr) {
  if (g.edge_count() == 0) {
    GroebnerBasis gb;
    gb.variables = static_cast<std::size_t>(2 * g.vertex_count());
    gb.characteristic = field.characteristic();
    return gb;
  }
  return buchberger_reduced_gb(edge_binomials(g, field), field, stats);
}

}  // namespace beireg
