#include "ramify2/slope_content.hpp"

#include <algorithm>

#include "ramify2/errors.hpp"

namespace ramify2 {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

slope_content::slope_content() : prime_(2), tame_(1), residue_(1) {}

slope_content::slope_content(int prime, std::vector<rational> wild, bigint tame,
                             bigint residue)
    : prime_(prime),
      wild_(std::move(wild)),
      tame_(std::move(tame)),
      residue_(std::move(residue)) {
    if (!is_prime(prime_)) throw domain_error("p must be prime");
    for (const rational& s : wild_) {
        if (s <= 1)
            throw domain_error("wild slope must exceed 1, got " +
                               format_rational(s));
    }
    if (tame_ < 1) throw domain_error("tame degree must be positive");
    if (boost::multiprecision::gcd(tame_, bigint(prime_)) != 1)
        throw domain_error("tame degree " + tame_.str() +
                           " shares a factor with p=" + std::to_string(prime_));
    if (residue_ < 1) throw domain_error("residue degree must be positive");
    std::sort(wild_.begin(), wild_.end());
}

namespace {

// cursor over the content grammar; blanks between tokens are skipped
struct scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_blanks() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool accept(char c) {
        skip_blanks();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw syntax_error(std::string("expected ") + what, pos);
    }
    bigint posint(const char* what) {
        skip_blanks();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw syntax_error(std::string("expected ") + what, pos);
        if (pos < text.size() && text[pos] == '.')
            throw syntax_error("decimal notation not allowed, use a/b", pos);
        bigint value(std::string(text.substr(start, pos - start)));
        if (value == 0) throw syntax_error(std::string(what) + " must be positive", start);
        return value;
    }
    rational slope() {
        bigint num = posint("slope numerator");
        if (accept('/')) {
            bigint den = posint("slope denominator");
            return rational(num, den);
        }
        skip_blanks();
        if (pos < text.size() && text[pos] == '.')
            throw syntax_error("decimal notation not allowed, use a/b", pos);
        return rational(num);
    }
    void done() {
        skip_blanks();
        if (pos != text.size()) throw syntax_error("trailing characters", pos);
    }
};

}  // namespace

slope_content slope_content::parse(std::string_view text, int prime) {
    scanner sc{text};
    sc.expect('[', "'['");
    std::vector<rational> wild;
    sc.skip_blanks();
    if (!sc.accept(']')) {
        wild.push_back(sc.slope());
        while (sc.accept(',')) wild.push_back(sc.slope());
        sc.expect(']', "']'");
    }
    sc.expect('_', "'_' before the tame degree");
    bigint tame = sc.posint("tame degree");
    bigint residue = 1;
    if (sc.accept('^')) residue = sc.posint("residue degree");
    sc.done();
    return slope_content(prime, std::move(wild), std::move(tame), std::move(residue));
}

std::string slope_content::format() const {
    std::string out = "[";
    for (std::size_t i = 0; i < wild_.size(); ++i) {
        if (i) out += ',';
        out += format_rational(wild_[i]);
    }
    out += "]_";
    out += tame_.str();
    if (residue_ != 1) {
        out += '^';
        out += residue_.str();
    }
    return out;
}

rational slope_content::gms() const {
    // sum of p^(i-1) (p-1) s_i, ascending slopes, then the tame term
    rational sum = 0;
    bigint weight = 1;
    for (const rational& s : wild_) {
        sum += rational(weight * (prime_ - 1)) * s;
        weight *= prime_;
    }
    sum += rational(tame_ - 1, tame_);
    return sum / rational(weight);  // weight is now p^m
}

slope_multiplicity slope_content::multiplicity(const rational& s) const {
    if (s <= 1)
        throw domain_error("slope multiplicity is defined for s > 1, got " +
                           format_rational(s));
    slope_multiplicity m{0, 0};
    for (const rational& w : wild_) {
        if (w == s) ++m.equal;
        if (w >= s) ++m.at_least;
    }
    return m;
}

std::string grd_factor::format() const {
    std::string out = std::to_string(prime) + "^";
    if (denominator(exponent) == 1) return out + numerator(exponent).str();
    return out + "(" + format_rational(exponent) + ")";
}

}  // namespace ramify2
