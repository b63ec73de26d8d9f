#pragma once

#include <cstdint>

namespace qpers {

/// The prime field GF(p), 2 <= p < 2^31. Elements are int64 values kept
/// in [0, p); products of two reduced elements fit in 62 bits.
class PrimeField {
 public:
  using value_type = std::int64_t;

  /// Throws std::invalid_argument when p is out of range or composite.
  explicit PrimeField(value_type p = 2);

  value_type characteristic() const noexcept { return p_; }

  value_type reduce(value_type x) const noexcept {
    value_type r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    value_type s = a - b;
    return s < 0 ? s + p_ : s;
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept { return (a * b) % p_; }

  /// Multiplicative inverse of a nonzero element.
  value_type inv(value_type a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  value_type p_;
};

bool is_prime(std::int64_t n) noexcept;

}  // namespace qpers
