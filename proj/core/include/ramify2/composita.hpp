#ifndef RAMIFY2_COMPOSITA_HPP
#define RAMIFY2_COMPOSITA_HPP

#include <optional>
#include <vector>

#include "ramify2/slope_content.hpp"

namespace ramify2 {

// Worst-case slope content of a compositum: wild slopes of both factors
// concatenated and sorted, tame and residue degrees replaced by lcms.
// Requires matching primes.
slope_content crude_compose(const slope_content& a, const slope_content& b);

// crude_compose followed by removal of shared slopes until at most
// max_wild wild slopes remain.  Walking the shared values in ascending
// order, a slope s may be removed at most min(m_s(a), m_s(b)) times, the
// rationale being that coinciding slopes can collapse in the compositum.
// Throws infeasible_error when even full removal leaves more than
// max_wild slopes.
slope_content cap_wild_count(const slope_content& a, const slope_content& b,
                             int max_wild);

// Left fold of the pairwise operations over one or more contents: with
// max_wild each step caps, without it each step is crude.  A single
// content folds to itself (still checked against the budget).
slope_content compose_many(const std::vector<slope_content>& parts,
                           std::optional<int> max_wild = std::nullopt);

// Containment test used to validate any claimed compositum bound beta
// against factors a and b.  For every wild slope value s occurring in
// a, b or beta:
//   m_s(beta)  >= max(m_s(a), m_s(b))
//   m_>=s(beta) <= m_>=s(a) + m_>=s(b)
// and tame degrees must satisfy t(beta) = lcm(t(a), t(b)).
bool check_compositum_bounds(const slope_content& a, const slope_content& b,
                             const slope_content& beta);

// Cap for the compositum of all 2-adic quartic fields with 2-group
// closure: [2,2,3,3,7/2,4]_1^4.
const slope_content& quartic_compositum_cap();

}  // namespace ramify2

#endif
