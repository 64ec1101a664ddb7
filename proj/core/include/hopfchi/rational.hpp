#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace hopfchi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);

// Falling-factorial binomial n(n-1)...(n-k+1)/k!; valid for negative n too,
// which is what polynomial identities like C(n, l) need.
Rational binomial(const Integer& n, unsigned k);
Integer binomial_uint(unsigned n, unsigned k);

Integer int_pow(const Integer& base, unsigned exp);

// "p/q", with "/q" omitted when the denominator is 1. This is the exact
// format reports use, so values survive JSON round trips losslessly.
std::string rational_to_string(const Rational& value);
Rational parse_rational(const std::string& text);  // throws ValidationError

}  // namespace hopfchi
