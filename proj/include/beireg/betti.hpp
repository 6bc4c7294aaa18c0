#pragma once

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "beireg/classify.hpp"
#include "beireg/graph.hpp"
#include "beireg/groebner.hpp"
#include "beireg/homology.hpp"
#include "beireg/monomial_ideal.hpp"

namespace beireg {

/// Graded Betti numbers beta_{i,j} of S/I.
class BettiTable {
 public:
  void add(int i, int j, std::size_t rank) {
    if (rank == 0) return;
    entries_[{i, j}] += rank;
  }

  std::size_t at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }

  /// max{j - i : beta_{i,j} != 0}.
  int regularity() const {
    int r = 0;
    for (const auto& [key, rank] : entries_) r = std::max(r, key.second - key.first);
    return r;
  }

  int projective_dimension() const {
    int p = 0;
    for (const auto& [key, rank] : entries_) p = std::max(p, key.first);
    return p;
  }

  /// Triangular display: columns i, rows j - i, '.' for zero.
  std::string to_text() const {
    const int pd = projective_dimension();
    const int reg = regularity();
    std::vector<std::size_t> totals(static_cast<std::size_t>(pd + 1), 0);
    for (const auto& [key, rank] : entries_) totals[static_cast<std::size_t>(key.first)] += rank;
    std::size_t width = 1;
    for (auto t : totals) width = std::max(width, std::to_string(t).size());
    std::ostringstream out;
    out << std::string(7, ' ');
    for (int i = 0; i <= pd; ++i) out << (i ? " " : "") << std::setw(static_cast<int>(width)) << i;
    out << "\ntotal: ";
    for (int i = 0; i <= pd; ++i) out << (i ? " " : "") << std::setw(static_cast<int>(width)) << totals[static_cast<std::size_t>(i)];
    out << '\n';
    for (int r = 0; r <= reg; ++r) {
      out << std::setw(5) << r << ": ";
      for (int i = 0; i <= pd; ++i) {
        const auto b = at(i, i + r);
        out << (i ? " " : "") << std::setw(static_cast<int>(width)) << (b == 0 ? std::string(".") : std::to_string(b));
      }
      out << '\n';
    }
    return out.str();
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::size_t> entries_;
};

enum class BettiMethod { Hochster, LcmLattice };
enum class GbRoute { Buchberger, Paths };

inline std::string to_string(BettiMethod m) { return m == BettiMethod::Hochster ? "hochster" : "lcmLattice"; }
inline std::string to_string(GbRoute r) { return r == GbRoute::Buchberger ? "buchberger" : "paths"; }

/// Resource limits of the oracle. Exceeding any of them raises BudgetError.
struct Budget {
  int hochster_max_n = 10;
  int lcm_max_n = 12;
  std::size_t max_lattice = 2'000'000;  // lcm-closed supports enumerated
  std::size_t max_faces = 20'000'000;   // faces of one complex
  std::size_t max_atoms = 24;           // generators below one lattice element
};

/// Overrides from "key=value" pairs separated by commas, e.g. the
/// BEI_BUDGET environment variable "hochster_n=17,lattice=50000000".
inline Budget parse_budget(std::string_view spec, Budget base = {}) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("budget entry '" + std::string(item) + "' lacks '='");
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || *end != '\0') throw ParseError("budget value '" + value + "' is not a number");
    if (key == "hochster_n") base.hochster_max_n = static_cast<int>(v);
    else if (key == "lcm_n") base.lcm_max_n = static_cast<int>(v);
    else if (key == "lattice") base.max_lattice = v;
    else if (key == "faces") base.max_faces = v;
    else if (key == "atoms") base.max_atoms = v;
    else throw ParseError("unknown budget key '" + key + "'");
  }
  return base;
}

inline Budget budget_from_env(Budget base = {}) {
  if (const char* env = std::getenv("BEI_BUDGET")) return parse_budget(env, base);
  return base;
}

/// Every union of generator supports (the nonzero elements of the lcm
/// lattice of a squarefree ideal), sorted by size then value.
inline std::vector<VarMask> lcm_lattice(const std::vector<VarMask>& gens, std::size_t limit) {
  std::unordered_set<VarMask> seen;
  std::vector<VarMask> all;
  for (VarMask g : gens) {
    const std::size_t before = all.size();
    if (seen.insert(g).second) all.push_back(g);
    for (std::size_t i = 0; i < before; ++i) {
      const VarMask u = all[i] | g;
      if (seen.insert(u).second) all.push_back(u);
    }
    if (all.size() > limit) throw BudgetError("lcm lattice size exceeded", all.size(), limit);
  }
  std::sort(all.begin(), all.end(), [](VarMask a, VarMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return all;
}

namespace detail {

inline BettiTable betti_hochster(const MonomialIdeal& ideal, const PrimeField& field, const Budget& budget) {
  const auto gens = ideal.support_masks();
  const SimplicialComplex delta = SimplicialComplex::stanley_reisner(ideal);
  BettiTable table;
  table.add(0, 0, 1);
  for (VarMask w : lcm_lattice(gens, budget.max_lattice)) {
    const int size = std::popcount(w);
    const auto h = reduced_homology(delta.restrict_to(w).faces(budget.max_faces), field);
    for (int k = -1; k + 1 < static_cast<int>(h.ranks.size()); ++k) table.add(size - k - 1, size, h.rank(k));
  }
  return table;
}

/// Crosscut complex of the open interval (0, m): subsets of the generators
/// dividing m whose union is strictly smaller than m.
inline FaceLists crosscut_faces(const std::vector<VarMask>& atoms, VarMask m, std::size_t max_faces) {
  FaceLists out;
  std::size_t count = 0;
  auto grow = [&](auto&& self, VarMask chosen, VarMask covered, std::size_t from) -> void {
    if (++count > max_faces) throw BudgetError("crosscut complex face count exceeded", count, max_faces);
    const auto dim = static_cast<std::size_t>(std::popcount(chosen));
    if (out.size() <= dim) out.resize(dim + 1);
    out[dim].push_back(chosen);
    for (std::size_t i = from; i < atoms.size(); ++i) {
      const VarMask next = covered | atoms[i];
      if (next == m) continue;
      self(self, chosen | (VarMask{1} << i), next, i + 1);
    }
  };
  grow(grow, 0, 0, 0);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

inline BettiTable betti_lcm_lattice(const MonomialIdeal& ideal, const PrimeField& field, const Budget& budget) {
  const auto gens = ideal.support_masks();
  BettiTable table;
  table.add(0, 0, 1);
  for (VarMask m : lcm_lattice(gens, budget.max_lattice)) {
    std::vector<VarMask> atoms;
    for (VarMask g : gens)
      if ((g & ~m) == 0) atoms.push_back(g);
    if (atoms.size() > budget.max_atoms)
      throw BudgetError("generators below one lcm lattice element exceeded", atoms.size(), budget.max_atoms);
    const auto h = reduced_homology(crosscut_faces(atoms, m, budget.max_faces), field);
    for (int k = -1; k + 1 < static_cast<int>(h.ranks.size()); ++k) table.add(k + 2, std::popcount(m), h.rank(k));
  }
  return table;
}

}  // namespace detail

/// Graded Betti numbers of S/I for a squarefree monomial ideal I.
///
/// Hochster: beta_{i,|W|}(S/I) = dim H~_{|W|-i-1}(Delta_W) summed over
/// W in the lcm lattice (other W give cones). LcmLattice:
/// beta_{i,m}(S/I) = dim H~_{i-2}((0, m)), the open interval replaced by its
/// atom crosscut complex.
inline BettiTable betti_table(const MonomialIdeal& ideal, const PrimeField& field, BettiMethod method,
                              const Budget& budget = {}) {
  if (!ideal.squarefree()) throw PreconditionError("Betti tables are implemented for squarefree ideals only");
  return method == BettiMethod::Hochster ? detail::betti_hochster(ideal, field, budget)
                                         : detail::betti_lcm_lattice(ideal, field, budget);
}

struct OracleOptions {
  std::uint32_t characteristic = kDefaultCharacteristic;
  GbRoute route = GbRoute::Buchberger;
  BettiMethod method = BettiMethod::Hochster;
  Budget budget;
};

struct OracleResult {
  int regularity = 0;
  BettiTable betti;
  MonomialIdeal initial;
  std::optional<GroebnerBasis> gb;  // set on the Buchberger route
};

/// In(J_G) by the requested route.
inline MonomialIdeal binomial_edge_initial_ideal(const Graph& g, const PrimeField& field, GbRoute route,
                                                 std::optional<GroebnerBasis>* gb_out = nullptr) {
  if (route == GbRoute::Paths) return admissible_initial_ideal(g);
  GroebnerBasis gb = binomial_edge_gb(g, field);
  MonomialIdeal in = initial_ideal(gb);
  if (gb_out) *gb_out = std::move(gb);
  return in;
}

/// reg(S/J_G), computed as reg(S/in(J_G)) of the squarefree lex initial
/// ideal (squarefree Gröbner degenerations preserve regularity).
inline OracleResult regularity_oracle(const Graph& g, const OracleOptions& options = {}) {
  const int n = g.vertex_count();
  const int limit = options.method == BettiMethod::Hochster ? options.budget.hochster_max_n : options.budget.lcm_max_n;
  if (n > limit) throw BudgetError("regularity oracle vertex budget (" + to_string(options.method) + ")",
                                   static_cast<std::size_t>(n), static_cast<std::size_t>(limit));
  const PrimeField field(options.characteristic);
  OracleResult r;
  r.initial = binomial_edge_initial_ideal(g, field, options.route, &r.gb);
  if (r.initial.variables() == 0) r.initial = MonomialIdeal(static_cast<std::size_t>(2 * n), {});
  r.betti = betti_table(r.initial, field, options.method, options.budget);
  r.regularity = r.betti.regularity();
  return r;
}

}  // namespace beireg
