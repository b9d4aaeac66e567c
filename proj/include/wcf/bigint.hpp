#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wcf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient. Returns 0 whenever a < 0, b < 0 or b > a,
/// so formulas with out-of-range arguments evaluate to an empty count.
BigInt binomial(std::int64_t a, std::int64_t b);

/// Exact m! for m >= 0.
BigInt factorial(std::int64_t m);

/// base^exp, guarded against absurdly large exponents.
BigInt int_pow(const BigInt& base, std::uint64_t exp);

/// Decimal rendering: "p" for integers, "p/q" otherwise.
std::string rat_string(const BigRat& value);

}  // namespace wcf
