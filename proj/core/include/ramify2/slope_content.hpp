#ifndef RAMIFY2_SLOPE_CONTENT_HPP
#define RAMIFY2_SLOPE_CONTENT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramify2/rational.hpp"

namespace ramify2 {

struct slope_multiplicity {
    int equal;     // slopes equal to s
    int at_least;  // slopes >= s
};

// p^gms contribution of one completion to the root discriminant of the
// Galois closure
struct grd_factor {
    int prime;
    rational exponent;

    std::string format() const;
};

// Ramification data of a local 2-adic (generally p-adic) Galois algebra:
// the wild slopes in weakly ascending order, the tame degree t, and the
// residue degree f.  Written [s1,...,sm]_t^f, with ^f omitted when f = 1.
//
// Immutable after construction; safe to share across threads.
class slope_content {
  public:
    // the trivial content [ ]_1 for p = 2
    slope_content();

    // Validates: p prime, every slope > 1, t >= 1 with gcd(t, p) = 1,
    // f >= 1.  Slopes are stored sorted; input order does not matter.
    slope_content(int prime, std::vector<rational> wild, bigint tame,
                  bigint residue = 1);

    // Text form per the grammar
    //   content := "[" slopes? "]" "_" posint ("^" posint)?
    //   slopes  := slope ("," slope)*
    //   slope   := posint ("/" posint)?
    // Blanks between tokens are skipped.  Decimal notation is rejected:
    // slopes are exact rationals ("7/2", never "3.5").  The prime is not
    // part of the notation and is supplied out of band.
    static slope_content parse(std::string_view text, int prime = 2);

    // canonical text; format() then parse() is the identity
    std::string format() const;

    int prime() const { return prime_; }
    const std::vector<rational>& wild() const { return wild_; }
    const bigint& tame_degree() const { return tame_; }
    const bigint& residue_degree() const { return residue_; }
    int wild_count() const { return static_cast<int>(wild_.size()); }

    // Galois mean slope
    //   gms = p^-m * ( sum_i p^(i-1) (p-1) s_i  +  (t-1)/t )
    // with the slopes taken in ascending order, so the largest slope gets
    // the dominant weight.  Independent of f.
    rational gms() const;

    // multiplicities of a candidate wild slope s (requires s > 1)
    slope_multiplicity multiplicity(const rational& s) const;

    grd_factor grd() const { return grd_factor{prime_, gms()}; }

    bool operator==(const slope_content& other) const = default;

  private:
    int prime_;
    std::vector<rational> wild_;
    bigint tame_;
    bigint residue_;
};

}  // namespace ramify2

#endif
