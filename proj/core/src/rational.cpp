#include "ramify2/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "ramify2/errors.hpp"

namespace ramify2 {

int ord_p(const bigint& n, const bigint& p) {
    if (n <= 0) throw domain_error("ord_p needs a positive argument");
    if (p < 2) throw domain_error("ord_p needs p >= 2");
    int v = 0;
    bigint m = n;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

int ord2(std::uint64_t n) {
    if (n == 0) throw domain_error("ord2 needs a positive argument");
    int v = 0;
    while ((n & 1u) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

bigint lcm(const bigint& a, const bigint& b) {
    return boost::multiprecision::lcm(a, b);
}

std::string format_rational(const rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
    std::size_t end = pos;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    return end;
}

}  // namespace

rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t num_end = scan_digits(text, pos);
    if (num_end == pos) throw syntax_error("expected digits", pos);
    bigint num(std::string(text.substr(pos, num_end - pos)));
    pos = num_end;
    bigint den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t den_end = scan_digits(text, pos);
        if (den_end == pos) throw syntax_error("expected denominator digits", pos);
        den = bigint(std::string(text.substr(pos, den_end - pos)));
        pos = den_end;
        if (den == 0) throw syntax_error("zero denominator", num_end + 1);
    }
    if (pos != text.size()) throw syntax_error("trailing characters in rational", pos);
    rational q(num, den);
    return negative ? rational(-q) : q;
}

}  // namespace ramify2
