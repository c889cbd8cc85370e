#include "ramify2/towers.hpp"

#include "ramify2/errors.hpp"

namespace ramify2 {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(int p) {
    if (!is_prime(p)) throw domain_error("p must be prime");
}

void require_window(int p, int n, const bigint& e, const bigint& nu) {
    auto [lo, hi] = nu_range(p, n, e);
    if (nu < lo || nu > hi)
        throw domain_error("nu=" + nu.str() + " outside [" + lo.str() + ", " +
                           hi.str() + "] for p=" + std::to_string(p) +
                           ", n=" + std::to_string(n) + ", e=" + e.str());
}

}  // namespace

std::pair<bigint, bigint> nu_range(int p, int n, const bigint& e) {
    require_prime(p);
    if (n < 1) throw domain_error("n must be positive");
    if (e < 1) throw domain_error("e must be positive");
    bigint pn = ipow(bigint(p), static_cast<unsigned>(n));
    return {e * pn, pn - 1 + n * e * pn};
}

bigint disc_step(int p, int n, const bigint& cE, const bigint& f,
                 const bigint& nu, const bigint& e) {
    if (cE < 0) throw domain_error("discriminant exponent must be nonnegative");
    if (f < 1) throw domain_error("f must be positive");
    require_window(p, n, e, nu);
    return ipow(bigint(p), static_cast<unsigned>(n)) * cE + f * nu;
}

rational avg_slope(int p, int n, const bigint& cE, const bigint& e,
                   const bigint& f, const bigint& nu) {
    if (cE < 0) throw domain_error("discriminant exponent must be nonnegative");
    if (f < 1) throw domain_error("f must be positive");
    require_window(p, n, e, nu);
    bigint pn = ipow(bigint(p), static_cast<unsigned>(n));
    return rational(cE, e * f) + rational(nu, (pn - 1) * e);
}

tower_trace simulate_tower(const tower_spec& spec) {
    require_prime(spec.prime);
    if (spec.base_e < 1) throw domain_error("base e must be positive");
    if (boost::multiprecision::gcd(spec.base_e, bigint(spec.prime)) != 1)
        throw domain_error("base must be tamely ramified: gcd(e, p) = 1");
    if (spec.base_f < 1) throw domain_error("base f must be positive");
    if (spec.c0 < 0) throw domain_error("c0 must be nonnegative");
    if (spec.c0 > spec.base_f * (spec.base_e - 1))
        throw domain_error("tame base forces c0 <= f*(e-1), got c0=" +
                           spec.c0.str());

    tower_trace trace;
    trace.exponents.push_back(spec.c0);
    bigint stage_e = spec.base_e;
    for (const nu_choice& choice : spec.steps) {
        auto [lo, hi] = nu_range(spec.prime, 1, stage_e);
        bigint nu;
        if (std::holds_alternative<nu_min_t>(choice)) {
            nu = lo;
        } else if (std::holds_alternative<nu_max_t>(choice)) {
            nu = hi;
        } else {
            nu = std::get<bigint>(choice);
            require_window(spec.prime, 1, stage_e, nu);
        }
        const bigint& c_prev = trace.exponents.back();
        trace.slopes.push_back(
            avg_slope(spec.prime, 1, c_prev, stage_e, spec.base_f, nu));
        trace.exponents.push_back(
            disc_step(spec.prime, 1, c_prev, spec.base_f, nu, stage_e));
        trace.nus.push_back(nu);
        stage_e *= spec.prime;
    }
    return trace;
}

rational max_slope_bound(int p, int i) {
    require_prime(p);
    if (i < 1) throw domain_error("stage index must be positive");
    return rational(i) + rational(p, p - 1);
}

rational closure_slope_bound(int p, const bigint& n) {
    require_prime(p);
    if (n < 1) throw domain_error("degree must be positive");
    return rational(p, p - 1) + ord_p(n, p);
}

}  // namespace ramify2
