#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "beireg/error.hpp"

namespace beireg {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/// Residues mod a prime that fits comfortably in 32 bits. Elements are plain
/// uint32_t in [0, p); the field object carries p and does the arithmetic.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw UnsupportedError("characteristic must be below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }

  Element from_int(long long v) const {
    const long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }

  /// Inverse by the extended Euclidean algorithm.
  Element inv(Element a) const {
    if (a == 0) throw PreconditionError("division by zero in GF(" + std::to_string(p_) + ")");
    long long t = 0, new_t = 1;
    long long r = p_, new_r = a;
    while (new_r != 0) {
      const long long q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return from_int(t);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace beireg
