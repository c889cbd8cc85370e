#include "ramify2/composita.hpp"

#include <algorithm>
#include <map>

#include "ramify2/errors.hpp"

namespace ramify2 {

namespace {

void require_same_prime(const slope_content& a, const slope_content& b) {
    if (a.prime() != b.prime())
        throw domain_error("cannot compose contents over different primes");
}

std::map<rational, int> value_counts(const slope_content& c) {
    std::map<rational, int> counts;
    for (const rational& s : c.wild()) ++counts[s];
    return counts;
}

}  // namespace

slope_content crude_compose(const slope_content& a, const slope_content& b) {
    require_same_prime(a, b);
    std::vector<rational> wild = a.wild();
    wild.insert(wild.end(), b.wild().begin(), b.wild().end());
    return slope_content(a.prime(), std::move(wild),
                         lcm(a.tame_degree(), b.tame_degree()),
                         lcm(a.residue_degree(), b.residue_degree()));
}

slope_content cap_wild_count(const slope_content& a, const slope_content& b,
                             int max_wild) {
    if (max_wild < 0) throw domain_error("max_wild must be nonnegative");
    slope_content crude = crude_compose(a, b);
    if (crude.wild_count() <= max_wild) return crude;

    // shared values can collapse in the compositum; remove them smallest
    // first, each at most min(m_s(a), m_s(b)) times
    std::map<rational, int> in_a = value_counts(a);
    std::map<rational, int> in_b = value_counts(b);
    std::map<rational, int> removable;
    for (const auto& [s, count] : in_a) {
        auto it = in_b.find(s);
        if (it != in_b.end()) removable[s] = std::min(count, it->second);
    }

    std::vector<rational> wild = crude.wild();  // sorted
    int excess = static_cast<int>(wild.size()) - max_wild;
    std::vector<rational> kept;
    kept.reserve(wild.size());
    for (const rational& s : wild) {
        auto it = removable.find(s);
        if (excess > 0 && it != removable.end() && it->second > 0) {
            --it->second;
            --excess;
            continue;
        }
        kept.push_back(s);
    }
    if (excess > 0)
        throw infeasible_error("cannot reduce compositum to " +
                               std::to_string(max_wild) + " wild slopes: " +
                               std::to_string(excess) + " over budget");
    return slope_content(crude.prime(), std::move(kept), crude.tame_degree(),
                         crude.residue_degree());
}

slope_content compose_many(const std::vector<slope_content>& parts,
                           std::optional<int> max_wild) {
    if (parts.empty()) throw domain_error("compose_many needs at least one content");
    slope_content acc = parts.front();
    if (max_wild && acc.wild_count() > *max_wild)
        throw infeasible_error("first factor already exceeds the wild budget");
    for (std::size_t i = 1; i < parts.size(); ++i) {
        acc = max_wild ? cap_wild_count(acc, parts[i], *max_wild)
                       : crude_compose(acc, parts[i]);
    }
    return acc;
}

bool check_compositum_bounds(const slope_content& a, const slope_content& b,
                             const slope_content& beta) {
    require_same_prime(a, b);
    require_same_prime(a, beta);
    if (beta.tame_degree() != lcm(a.tame_degree(), b.tame_degree())) return false;

    std::vector<rational> values = a.wild();
    values.insert(values.end(), b.wild().begin(), b.wild().end());
    values.insert(values.end(), beta.wild().begin(), beta.wild().end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    for (const rational& s : values) {
        slope_multiplicity ma = a.multiplicity(s);
        slope_multiplicity mb = b.multiplicity(s);
        slope_multiplicity mbeta = beta.multiplicity(s);
        if (mbeta.equal < std::max(ma.equal, mb.equal)) return false;
        if (mbeta.at_least > ma.at_least + mb.at_least) return false;
    }
    return true;
}

const slope_content& quartic_compositum_cap() {
    static const slope_content cap = slope_content::parse("[2,2,3,3,7/2,4]_1^4");
    return cap;
}

}  // namespace ramify2
