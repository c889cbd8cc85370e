#ifndef RAMIFY2_TOWERS_HPP
#define RAMIFY2_TOWERS_HPP

#include <utility>
#include <variant>
#include <vector>

#include "ramify2/rational.hpp"

namespace ramify2 {

// One step of a wildly ramified tower: the conductor-style exponent nu is
// either given explicitly or chosen as the smallest / largest admissible
// value for its stage.
struct nu_min_t {
    bool operator==(const nu_min_t&) const = default;
};
struct nu_max_t {
    bool operator==(const nu_max_t&) const = default;
};
using nu_choice = std::variant<bigint, nu_min_t, nu_max_t>;

// Tower of degree-p extensions over a base with ramification index e
// (tame: gcd(e, p) = 1), residue degree f and discriminant exponent c0.
// A tamely ramified base forces c0 <= f*(e-1); this is what keeps the
// slope bounds below true for every valid spec.
struct tower_spec {
    int prime = 2;
    bigint base_e = 1;
    bigint base_f = 1;
    bigint c0 = 0;
    std::vector<nu_choice> steps;
};

struct tower_trace {
    std::vector<bigint> nus;        // resolved nu_1..nu_m
    std::vector<bigint> exponents;  // c0, c1, ..., cm
    std::vector<rational> slopes;   // S_1..S_m
};

// Admissible window [e*p^n, p^n - 1 + n*e*p^n] for the exponent nu of a
// totally ramified degree-p^n step over a base with ramification index e.
std::pair<bigint, bigint> nu_range(int p, int n, const bigint& e);

// Discriminant exponent recursion c(L) = p^n c(E) + f * nu.
// nu must lie in nu_range(p, n, e).
bigint disc_step(int p, int n, const bigint& cE, const bigint& f,
                 const bigint& nu, const bigint& e = 1);

// Galois slope of the new layer seen from Qp:
//   c(E) / (e*f)  +  nu / ((p^n - 1) * e)
// nu must lie in nu_range(p, n, e).
rational avg_slope(int p, int n, const bigint& cE, const bigint& e,
                   const bigint& f, const bigint& nu);

// Runs the recursion stage by stage; stage i (1-based) works over
// ramification index e*p^(i-1) and window nu_range(p, 1, e*p^(i-1)).
// With no steps the trace carries just c0.
tower_trace simulate_tower(const tower_spec& spec);

// Slope ceiling for the i-th stage of any valid tower: i + p/(p-1).
// The all-max tower over an e = f = 1, c0 = 0 base attains it.
rational max_slope_bound(int p, int i);

// Slope ceiling p/(p-1) + ord_p(n) for the Galois closure of any
// degree-n field (wild part of degree dividing p^ord_p(n)).
rational closure_slope_bound(int p, const bigint& n);

}  // namespace ramify2

#endif
