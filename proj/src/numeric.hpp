#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tightcount {

// All arithmetic in this project is exact. Counts are arbitrary-precision
// integers, identity checks use arbitrary-precision rationals; there is no
// floating point anywhere in the core.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace tightcount
