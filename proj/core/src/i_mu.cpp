#include <algorithm>
#include <cmath>
#include <string>

#include "geew/distribution.hpp"
#include "geew/error.hpp"
#include "geew/specfun.hpp"

namespace geew {

namespace sd = specfun::detail;

bool lemma_condition_holds(const IMuParams& p, std::size_t horizon, double tol) {
    if (p.nu == 0.0) return false;
    for (std::size_t l = 1; l <= horizon; ++l) {
        const double v = p.rho + (static_cast<double>(l) + p.mu) / p.nu;
        if (v >= 1.0 - tol && sd::near_integer(v, tol)) return false;
    }
    return true;
}

SeriesValue i_mu_series(const IMuParams& p, const TruncationPolicy& policy, ConditionCheck check) {
    policy.validate();
    if (!(p.mu > 0.0) || !(p.a > 0.0)) throw DomainError("i_mu_series: requires mu > 0 and a > 0");
    if (!std::isfinite(p.nu) || !std::isfinite(p.rho)) throw DomainError("i_mu_series: non-finite nu or rho");
    if (check == ConditionCheck::strict && !lemma_condition_holds(p))
        throw DomainError("i_mu_series: rho + (l + mu)/nu is a natural number for some l");

    SeriesValue out;
    if (p.nu == 0.0) {
        out.value = std::pow(1.0 + p.a, p.rho) * std::tgamma(p.mu);
        out.terms_used = 1;
        out.converged = true;
        return out;
    }
    if (p.nu < 0.0 && !(p.mu + p.nu * p.rho > 0.0))
        throw DomainError("i_mu_series: with nu < 0 the integral needs mu + nu rho > 0");

    const double log_a = std::log(p.a);
    const double z0 = std::exp(-log_a / p.nu);
    // On x < z0 the binomial is expanded in powers of the smaller of 1 and
    // a x^nu, on x > z0 in the other; nu < 0 swaps the two halves.
    const bool swapped = p.nu < 0.0;

    struct Cursor {
        std::size_t n = 0;
        double c = 1.0;  // C(rho, n)
    } cur;
    auto binom = [&](std::size_t n) {
        if (n < cur.n) cur = Cursor{};
        while (cur.n < n) {
            cur.c *= (p.rho - static_cast<double>(cur.n)) / static_cast<double>(cur.n + 1);
            ++cur.n;
        }
        return cur.c;
    };
    auto term = [&](std::size_t n) {
        const double c = binom(n);
        if (c == 0.0) return 0.0;
        const double nn = static_cast<double>(n);
        const double e_lo = swapped ? p.rho - nn : nn;  // power of a on [0, z0]
        const double e_hi = swapped ? nn : p.rho - nn;  // power of a on [z0, inf)
        const double lo = std::exp(e_lo * log_a + sd::log_lower_incomplete_gamma(p.mu + p.nu * e_lo, z0));
        const double hi = std::exp(e_hi * log_a + sd::log_upper_incomplete_gamma(p.mu + p.nu * e_hi, z0));
        return c * (lo + hi);
    };

    SeriesOptions opts;
    opts.accelerate_alternating = true;
    // binomial coefficients alternate in sign only beyond n > rho
    opts.min_terms = static_cast<std::size_t>(std::max(0.0, std::ceil(p.rho))) + 1;
    return sum_series(term, policy, opts);
}

}  // namespace geew
