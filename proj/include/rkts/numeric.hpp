#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace rkts {

using BigInt = boost::multiprecision::cpp_int;

// Exact numbers are arbitrary-precision rationals, kept in lowest terms with
// a positive denominator (cpp_rational maintains both invariants).
using BigRational = boost::multiprecision::cpp_rational;

double rational_to_double(const BigRational& r);

// "5", "-5", "1/2", "-22/7"
std::string rational_to_string(const BigRational& r);

// Shortest representation that reads back to the same binary64 value.
// Integral values keep a ".0" suffix so they stay inexact when re-read.
std::string inexact_to_string(double d);

// Exact square root when the argument is a perfect square of a rational,
// nullopt otherwise. Caller must reject negatives first.
std::optional<BigRational> exact_sqrt(const BigRational& r);

}  // namespace rkts
