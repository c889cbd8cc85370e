#ifndef RAMIFY2_RATIONAL_HPP
#define RAMIFY2_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ramify2 {

// Exact arbitrary-precision arithmetic everywhere; no floating point is used
// anywhere in the library.
using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint ipow(const bigint& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// p-adic valuation of n (n > 0)
int ord_p(const bigint& n, const bigint& p);
int ord2(std::uint64_t n);

bigint lcm(const bigint& a, const bigint& b);

// "a/b" with the denominator omitted when it is 1
std::string format_rational(const rational& q);

// strict: optional sign, digits, optional "/digits"; no decimals, no blanks
rational parse_rational(std::string_view text);

}  // namespace ramify2

#endif
