#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "beireg/field.hpp"

namespace beireg {

/// Dense exponent vector over x1 > ... > xn > y1 > ... > yn, stored as
/// indices 0..n-1 for the x's and n..2n-1 for the y's.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variables) : exp_(variables, 0) {}

  std::size_t variables() const { return exp_.size(); }
  std::uint8_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint8_t& operator[](std::size_t i) { return exp_[i]; }

  int degree() const {
    int d = 0;
    for (auto e : exp_) d += e;
    return d;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    return true;
  }

  bool squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](std::uint8_t e) { return e <= 1; });
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.variables());
    for (std::size_t i = 0; i < a.exp_.size(); ++i) m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.variables());
    for (std::size_t i = 0; i < a.exp_.size(); ++i) m.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] + b.exp_[i]);
    return m;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.variables());
    for (std::size_t i = 0; i < a.exp_.size(); ++i) m.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic order: the first differing exponent decides, larger wins.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp_.size(); ++i)
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] <=> b.exp_[i];
    return std::strong_ordering::equal;
  }

  /// "x1*y2", "x3^2*y1", or "1".
  std::string to_string() const {
    const std::size_t n = exp_.size() / 2;
    std::string out;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
      if (exp_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += (i < n ? "x" : "y") + std::to_string(i % n + 1);
      if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<std::uint8_t> exp_;
};

/// x_i (for i < n) or y_{i-n}.
inline Monomial variable_monomial(std::size_t variables, std::size_t index) {
  Monomial m(variables);
  m[index] = 1;
  return m;
}

struct Term {
  PrimeField::Element coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms in strictly decreasing lex order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  /// Normalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(std::vector<Term> terms, const PrimeField& field) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coeff = field.add(merged.back().coeff, t.coeff);
      } else {
        merged.push_back(std::move(t));
      }
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
    }
    terms_ = std::move(merged);
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  /// Copy without the leading term.
  Polynomial tail() const {
    Polynomial out;
    out.terms_.assign(terms_.begin() + (terms_.empty() ? 0 : 1), terms_.end());
    return out;
  }

  Polynomial monic(const PrimeField& field) const {
    if (is_zero()) return *this;
    Polynomial out = *this;
    const auto scale = field.inv(leading().coeff);
    for (auto& t : out.terms_) t.coeff = field.mul(t.coeff, scale);
    return out;
  }

  /// this - c * m * other, merging two sorted term lists.
  Polynomial minus_multiple(PrimeField::Element c, const Monomial& m, const Polynomial& other,
                            const PrimeField& field) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end()) {
        out.terms_.push_back(*a++);
        continue;
      }
      Monomial shifted = b->mono * m;
      if (a == terms_.end() || shifted > a->mono) {
        out.terms_.push_back({field.neg(field.mul(c, b->coeff)), std::move(shifted)});
        ++b;
      } else if (a->mono > shifted) {
        out.terms_.push_back(*a++);
      } else {
        const auto coeff = field.sub(a->coeff, field.mul(c, b->coeff));
        if (coeff != 0) out.terms_.push_back({coeff, a->mono});
        ++a;
        ++b;
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Terms as coeff*monomial joined by " + ", coefficients as residues.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      if (!out.empty()) out += " + ";
      out += std::to_string(t.coeff) + "*" + t.mono.to_string();
    }
    return out;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace beireg
