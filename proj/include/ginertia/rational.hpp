#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ginertia {

/// Exact fraction used for congruence-reduction pivots.  Always stored
/// reduced with a positive denominator; zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace ginertia
