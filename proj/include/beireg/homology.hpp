#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "beireg/error.hpp"
#include "beireg/field.hpp"
#include "beireg/monomial_ideal.hpp"

namespace beireg {

/// Ranks of reduced homology over GF(p); ranks[d + 1] is dim H~_d for
/// d >= -1. Empty for the void complex.
struct ReducedHomology {
  std::vector<std::size_t> ranks;

  std::size_t rank(int d) const {
    const auto i = static_cast<std::size_t>(d + 1);
    return d >= -1 && i < ranks.size() ? ranks[i] : 0;
  }

  bool acyclic() const {
    return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
  }

  friend bool operator==(const ReducedHomology&, const ReducedHomology&) = default;
};

/// Faces grouped by dimension: faces[d + 1] holds the sorted d-faces.
using FaceLists = std::vector<std::vector<VarMask>>;

/// Complex given by its minimal non-faces on a ground set: W is a face iff
/// W lies in the ground set and contains no non-face.
class SimplicialComplex {
 public:
  SimplicialComplex(VarMask ground, std::vector<VarMask> minimal_nonfaces)
      : ground_(ground), nonfaces_(std::move(minimal_nonfaces)) {}

  /// Stanley-Reisner complex of a squarefree monomial ideal.
  static SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
    const std::size_t vars = ideal.variables();
    if (vars > 64) throw UnsupportedError("simplicial complexes are limited to 64 vertices");
    const VarMask ground = vars == 64 ? ~VarMask{0} : (VarMask{1} << vars) - 1;
    return SimplicialComplex(ground, ideal.support_masks());
  }

  VarMask ground() const { return ground_; }
  const std::vector<VarMask>& minimal_nonfaces() const { return nonfaces_; }

  bool is_face(VarMask f) const {
    if ((f & ~ground_) != 0) return false;
    return std::none_of(nonfaces_.begin(), nonfaces_.end(), [&](VarMask nf) { return (nf & ~f) == 0; });
  }

  bool is_void() const {
    return std::any_of(nonfaces_.begin(), nonfaces_.end(), [](VarMask nf) { return nf == 0; });
  }

  /// Induced subcomplex on W.
  SimplicialComplex restrict_to(VarMask w) const {
    std::vector<VarMask> kept;
    for (VarMask nf : nonfaces_)
      if ((nf & ~w) == 0) kept.push_back(nf);
    return SimplicialComplex(ground_ & w, std::move(kept));
  }

  /// All faces, by dimension. Throws BudgetError past `max_faces`.
  FaceLists faces(std::size_t max_faces) const {
    FaceLists out;
    if (is_void()) return out;
    std::vector<int> verts;
    for (int v = 0; v < 64; ++v)
      if ((ground_ >> v) & 1) verts.push_back(v);
    // Non-faces containing each vertex.
    std::vector<std::vector<VarMask>> through(64);
    for (VarMask nf : nonfaces_)
      for (int v : verts)
        if ((nf >> v) & 1) through[static_cast<std::size_t>(v)].push_back(nf);
    std::size_t count = 0;
    auto emit = [&](VarMask f) {
      if (++count > max_faces) throw BudgetError("simplicial complex face count exceeded", count, max_faces);
      const auto dim = static_cast<std::size_t>(std::popcount(f));
      if (out.size() <= dim) out.resize(dim + 1);
      out[dim].push_back(f);
    };
    auto grow = [&](auto&& self, VarMask face, std::size_t from) -> void {
      emit(face);
      for (std::size_t i = from; i < verts.size(); ++i) {
        const int v = verts[i];
        const VarMask next = face | (VarMask{1} << v);
        const auto& nfs = through[static_cast<std::size_t>(v)];
        if (std::any_of(nfs.begin(), nfs.end(), [&](VarMask nf) { return (nf & ~next) == 0; })) continue;
        self(self, next, i + 1);
      }
    };
    grow(grow, 0, 0);
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
  }

 private:
  VarMask ground_;
  std::vector<VarMask> nonfaces_;
};

namespace detail {

using SparseColumn = std::vector<std::pair<std::uint32_t, PrimeField::Element>>;

/// col -= factor * other, both sorted by row.
inline void axpy(SparseColumn& col, PrimeField::Element factor, const SparseColumn& other, const PrimeField& field) {
  SparseColumn out;
  out.reserve(col.size() + other.size());
  auto a = col.begin();
  auto b = other.begin();
  while (a != col.end() || b != other.end()) {
    if (b == other.end() || (a != col.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == col.end() || b->first < a->first) {
      out.emplace_back(b->first, field.neg(field.mul(factor, b->second)));
      ++b;
    } else {
      const auto c = field.sub(a->second, field.mul(factor, b->second));
      if (c != 0) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  col = std::move(out);
}

}  // namespace detail

/// Reduced homology from explicit face lists (faces[0] must be {0}, the
/// empty face, unless the complex is void). Boundary ranks come from
/// column reduction, highest dimension first, skipping columns known to
/// reduce to zero.
inline ReducedHomology reduced_homology(const FaceLists& faces, const PrimeField& field) {
  ReducedHomology h;
  if (faces.empty()) return h;
  const std::size_t levels = faces.size();  // dimensions -1 .. levels-2
  std::vector<std::size_t> boundary_rank(levels + 1, 0);  // boundary_rank[d+1] = rank of boundary from dim d
  std::vector<std::vector<bool>> cleared(levels);
  for (std::size_t l = 0; l < levels; ++l) cleared[l].assign(faces[l].size(), false);

  for (std::size_t l = levels - 1; l >= 1; --l) {
    const auto& cols = faces[l];
    const auto& rows = faces[l - 1];
    std::vector<int> pivot_of_row(rows.size(), -1);
    std::vector<detail::SparseColumn> reduced;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cleared[l][c]) continue;
      detail::SparseColumn col;
      const VarMask face = cols[c];
      int sign_index = 0;
      for (VarMask rest = face; rest != 0; rest &= rest - 1, ++sign_index) {
        const VarMask bit = rest & (~rest + 1);
        const auto row = static_cast<std::uint32_t>(std::lower_bound(rows.begin(), rows.end(), face & ~bit) - rows.begin());
        col.emplace_back(row, (sign_index % 2 == 0) ? 1u : field.neg(1));
      }
      std::sort(col.begin(), col.end());
      while (!col.empty()) {
        const auto low = col.back().first;
        const int p = pivot_of_row[low];
        if (p < 0) break;
        const auto& piv = reduced[static_cast<std::size_t>(p)];
        detail::axpy(col, field.div(col.back().second, piv.back().second), piv, field);
      }
      if (col.empty()) continue;
      const auto low = col.back().first;
      pivot_of_row[low] = static_cast<int>(reduced.size());
      reduced.push_back(std::move(col));
      cleared[l - 1][low] = true;
      ++boundary_rank[l];
    }
  }
  h.ranks.resize(levels);
  for (std::size_t l = 0; l < levels; ++l)
    h.ranks[l] = faces[l].size() - boundary_rank[l] - (l + 1 < levels ? boundary_rank[l + 1] : 0);
  while (!h.ranks.empty() && h.ranks.back() == 0) h.ranks.pop_back();
  return h;
}

inline constexpr int kMaxHomologyGround = 24;

/// Reduced homology of the complex restricted to W (|W| <= 24).
inline ReducedHomology reduced_homology_ranks(const SimplicialComplex& complex, VarMask w, const PrimeField& field,
                                              std::size_t max_faces = 50'000'000) {
  if (std::popcount(w & complex.ground()) > kMaxHomologyGround)
    throw BudgetError("restriction ground set too large", static_cast<std::size_t>(std::popcount(w & complex.ground())),
                      kMaxHomologyGround);
  return reduced_homology(complex.restrict_to(w).faces(max_faces), field);
}

}  // namespace beireg
