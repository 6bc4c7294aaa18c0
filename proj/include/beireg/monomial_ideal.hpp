#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "beireg/polynomial.hpp"

namespace beireg {

/// Squarefree monomial over at most 64 variables as a bit set.
using VarMask = std::uint64_t;

/// Minimally generated monomial ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Drops every generator divisible by another (and duplicates); sorts
  /// generators in decreasing lex order.
  MonomialIdeal(std::size_t variables, std::vector<Monomial> gens) : variables_(variables) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree() || (a.degree() == b.degree() && a > b); });
    for (auto& m : gens) {
      const bool redundant =
          std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& kept) { return kept.divides(m); });
      if (!redundant) gens_.push_back(std::move(m));
    }
    std::sort(gens_.begin(), gens_.end(), std::greater<>());
  }

  std::size_t variables() const { return variables_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.squarefree(); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  /// Generator supports as bit sets; requires a squarefree ideal in at most
  /// 64 variables.
  std::vector<VarMask> support_masks() const {
    if (variables_ > 64) throw UnsupportedError("more than 64 variables");
    std::vector<VarMask> out;
    for (const auto& g : gens_) {
      VarMask mask = 0;
      for (std::size_t i = 0; i < variables_; ++i)
        if (g[i] != 0) mask |= VarMask{1} << i;
      out.push_back(mask);
    }
    return out;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i].to_string();
    return out + "}";
  }

 private:
  std::size_t variables_ = 0;
  std::vector<Monomial> gens_;
};

}  // namespace beireg
