#include "symdyn/nat.hpp"

#include <cmath>
#include <stdexcept>

namespace symdyn {

double log_nat(const Nat& value) {
  if (value <= 0) {
    throw std::domain_error("log_nat requires a positive value");
  }
  const unsigned bits = boost::multiprecision::msb(value);
  if (bits < 500) {
    return std::log(value.convert_to<double>());
  }
  const unsigned shift = bits - 52;
  const Nat mantissa = value >> shift;
  return std::log(mantissa.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

Nat nat_pow(const Nat& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace symdyn
