#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symdyn {

// Complexity values reach card(A)^n, so all counting is done on unbounded
// naturals; fixed-width arithmetic would silently corrupt entropy data.
using Nat = boost::multiprecision::cpp_int;

// log of an exact natural, usable far beyond the double range.
double log_nat(const Nat& value);

Nat nat_pow(const Nat& base, unsigned exponent);

}  // namespace symdyn
