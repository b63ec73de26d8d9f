#include "qpers/field.hpp"

#include <stdexcept>
#include <string>

namespace qpers {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

PrimeField::PrimeField(value_type p) : p_(p) {
  if (p < 2 || p >= (value_type{1} << 31))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " out of range [2, 2^31)");
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid
  value_type t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    value_type q = r / new_r;
    value_type tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace qpers
