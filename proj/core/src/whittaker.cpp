#include <algorithm>
#include <cmath>
#include <string>

#include "geew/specfun.hpp"

namespace geew::specfun {

namespace {

// Coefficient Gamma(g) / Gamma(d) * z^{e} as sign and log magnitude;
// a pole in the denominator makes the coefficient vanish.
struct Coef {
    int sign = 0;
    double log_mag = 0.0;
};

Coef gamma_ratio_power(double g, double d, double log_z, double e) {
    int sg = 0;
    int sd = 0;
    const double lg = log_gamma(g, sg);
    const double ld = log_gamma(d, sd);
    if (sd == 0) return {};
    if (sg == 0) throw NearDegenerateIndexError("whittaker_w: Gamma(+-2b) at a pole");
    return {sg * sd, lg - ld + e * log_z};
}

double connection_formula(double a, double b, double z, const TruncationPolicy& outer) {
    // The two terms are of size e^{z/2} while W is of size e^{-z/2}; sum each
    // 1F1 further so truncation does not dominate the cancellation.
    TruncationPolicy policy = outer;
    policy.rel_tol = std::max(1e-17, outer.rel_tol * std::exp(-z));
    const double lz = std::log(z);
    // e^{-z/2} z^{1/2+b} [ z^{-2b} G(2b)/G(b-a+1/2) M(-b-a+1/2, 1-2b, z)
    //                    + G(-2b)/G(-b-a+1/2) M(b-a+1/2, 1+2b, z) ]
    const double pre = -0.5 * z + (0.5 + b) * lz;
    const Coef c1 = gamma_ratio_power(2.0 * b, b - a + 0.5, lz, -2.0 * b);
    const Coef c2 = gamma_ratio_power(-2.0 * b, -b - a + 0.5, lz, 0.0);
    double w = 0.0;
    if (c1.sign != 0) w += c1.sign * std::exp(c1.log_mag + pre) * kummer_1f1(-b - a + 0.5, 1.0 - 2.0 * b, z, policy).value;
    if (c2.sign != 0) w += c2.sign * std::exp(c2.log_mag + pre) * kummer_1f1(b - a + 0.5, 1.0 + 2.0 * b, z, policy).value;
    return w;
}

}  // namespace

double whittaker_w(const WhittakerParams& p, const WhittakerOptions& opts) {
    if (!(p.z > 0.0)) throw DomainError("whittaker_w: requires z > 0");
    if (!(opts.eps_b > 0.0)) throw DomainError("whittaker_w: requires eps_b > 0");
    const double two_b = 2.0 * p.b;
    if (detail::near_integer(two_b, opts.eps_b)) {
        if (!opts.perturbation)
            throw NearDegenerateIndexError("whittaker_w: 2b = " + std::to_string(two_b) +
                                           " is within eps_b of an integer; the connection formula "
                                           "needs 2b not in Z (enable perturbation mode)");
        // Evaluate symmetrically about the nearest admissible index.
        const double centre = 0.5 * std::round(two_b);
        const double h = opts.eps_b;
        return 0.5 * (connection_formula(p.a, centre + h, p.z, opts.policy) +
                      connection_formula(p.a, centre - h, p.z, opts.policy));
    }
    return connection_formula(p.a, p.b, p.z, opts.policy);
}

}  // namespace geew::specfun
