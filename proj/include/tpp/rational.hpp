#pragma once

#include <string>

#include <boost/rational.hpp>

#include "tpp/errors.hpp"

namespace tpp {

// Exact rational scalar for the group-algebra arithmetic.
//
// Never compare a Rational against a bare integer: boost 1.74's mixed-type
// operator== recurses into itself under C++20's reversed-candidate lookup.
// Compare against Rational(k), or test .numerator() for zero.
using Rational = boost::rational<long long>;

// "3", "-3", "1/2", "-7/4". Throws input_error on malformed text or a zero
// denominator.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational; integers print without the "/1".
std::string format_rational(const Rational& r);

}  // namespace tpp
