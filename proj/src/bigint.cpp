#include "wcf/bigint.hpp"

#include <algorithm>

#include "wcf/errors.hpp"

namespace wcf {

BigInt binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || b > a) return 0;
    const std::int64_t k = std::min(b, a - b);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= a - k + i;
        result /= i;  // exact: result is binomial(a-k+i, i) after each step
    }
    return result;
}

BigInt factorial(std::int64_t m) {
    if (m < 0) throw DomainError("factorial: negative argument");
    BigInt result = 1;
    for (std::int64_t i = 2; i <= m; ++i) result *= i;
    return result;
}

BigInt int_pow(const BigInt& base, std::uint64_t exp) {
    constexpr std::uint64_t kExponentGuard = 1u << 24;
    if (exp > kExponentGuard) {
        throw ResourceLimitError("int_pow: exponent exceeds guard of 2^24");
    }
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

std::string rat_string(const BigRat& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace wcf
