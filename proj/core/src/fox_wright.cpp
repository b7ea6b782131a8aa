#include <cmath>
#include <string>

#include "geew/specfun.hpp"

namespace geew::specfun {

namespace {

// (a)_{An} z^n / n! assembled from log magnitudes with explicit sign.
double starred_term(double a, double A, double z, double log_gamma_a, int sign_a, std::size_t n) {
    const double nn = static_cast<double>(n);
    if (n == 0) return 1.0;
    int sign_c = 0;
    const double lc = log_gamma(a + A * nn, sign_c);
    if (sign_c == 0) throw DomainError("fox_wright_1psi0: a + A n hits a pole of Gamma");
    const double lm = lc - log_gamma_a + nn * std::log(std::fabs(z)) - std::lgamma(nn + 1.0);
    int sign = sign_c * sign_a;
    if (z < 0.0 && (n % 2 == 1)) sign = -sign;
    return sign * std::exp(lm);
}

// First index at which the term ratio starts increasing; for A > 1 the
// magnitudes can rise, fall and rise again, and only the second rise marks
// divergence.
std::size_t ratio_turning_point(double a, double A) {
    auto log_ratio = [&](double n) {
        return log_gamma(a + A * (n + 1.0)) - log_gamma(a + A * n) - std::log(n + 1.0);
    };
    double prev = log_ratio(0.0);
    for (std::size_t n = 1; n < 100'000; ++n) {
        const double cur = log_ratio(static_cast<double>(n));
        if (cur >= prev) return n;
        prev = cur;
    }
    return 100'000;
}

}  // namespace

SeriesValue fox_wright_1psi0(const FoxWright1Psi0Params& p, const TruncationPolicy& policy) {
    if (!(p.A > 0.0)) throw DomainError("fox_wright_1psi0: requires A > 0");
    if (!std::isfinite(p.a) || !std::isfinite(p.z)) throw DomainError("fox_wright_1psi0: non-finite argument");
    int sign_a = 0;
    const double lga = log_gamma(p.a, sign_a);
    if (sign_a == 0) throw DomainError("fox_wright_1psi0: a must not be a pole of Gamma");

    SeriesValue out;
    if (p.z == 0.0) {
        out.value = 1.0;
        out.terms_used = 1;
        out.converged = true;
    } else {
        SeriesOptions opts;
        if (p.A == 1.0 && std::fabs(p.z) >= 1.0)
            throw DivergenceError("fox_wright_1psi0: with A = 1 the series converges only for |z| < 1");
        if (p.A > 1.0) {
            if (!policy.allow_asymptotic)
                throw DivergenceError("fox_wright_1psi0: A = " + std::to_string(p.A) +
                                      " > 1 violates the convergence condition 1 - A > 0; "
                                      "enable asymptotic mode for an optimally truncated value");
            opts.detect_divergence = true;
            opts.min_terms = ratio_turning_point(p.a, p.A);
        } else {
            // terms may grow before they decay
            opts.min_terms = static_cast<std::size_t>(std::ceil(std::max(0.0, -p.a / p.A))) + 2;
        }
        out = sum_series(
            [&](std::size_t n) { return starred_term(p.a, p.A, p.z, lga, sign_a, n); }, policy, opts);
        // formally divergent even when the terms underflow before turning
        if (p.A > 1.0) out.asymptotic = true;
    }
    if (!p.starred) {
        const double g = std::fabs(p.a) < 170.0 ? std::tgamma(p.a) : sign_a * std::exp(lga);
        out.value *= g;
        out.tail_estimate *= std::fabs(g);
    }
    return out;
}

double fox_wright_2psi0_polynomial(int rho, double mu, double nu, double a) {
    if (rho < 0) throw DomainError("fox_wright_2psi0_polynomial: requires rho >= 0");
    if (!(mu > 0.0) || !(nu > 0.0)) throw DomainError("fox_wright_2psi0_polynomial: requires mu, nu > 0");
    if (!(a >= 0.0)) throw DomainError("fox_wright_2psi0_polynomial: requires a >= 0");
    // Gamma(mu) (-rho)_n (mu)_{nu n} (-a)^n / n! = C(rho, n) a^n Gamma(mu + nu n)
    CompensatedSum sum;
    for (int n = 0; n <= rho; ++n) {
        const double c = detail::binomial(rho, static_cast<std::size_t>(n));
        const double lt = (n == 0 ? 0.0 : n * std::log(a)) + log_gamma(mu + nu * n);
        sum.add(c * std::exp(lt));
    }
    return sum.value();
}

}  // namespace geew::specfun
