#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "geew/distribution.hpp"
#include "geew/error.hpp"
#include "geew/specfun.hpp"

namespace geew {

namespace sd = specfun::detail;

namespace {

// Gamma(x + s) / Gamma(x) for real x, s with neither at a pole.
double gamma_ratio(double x, double s) {
    int s1 = 0;
    const double v = sd::log_pochhammer(x, s, s1);
    return s1 * std::exp(v);
}

void accumulate(SeriesValue& acc, CompensatedSum& sum, double coef, const SeriesValue& part) {
    sum.add(coef * part.value);
    acc.tail_estimate += std::fabs(coef) * part.tail_estimate;
    acc.terms_used += part.terms_used;
    acc.converged = acc.converged && part.converged;
    acc.asymptotic = acc.asymptotic || part.asymptotic;
}

SeriesValue psi_unstarred(double c, double k, double a, const TruncationPolicy& policy) {
    if (!(c > 0.0))
        throw DomainError("raw_moment_integer_alpha: Fox-Wright parameter " + std::to_string(c) +
                          " <= 0; r is below the admissible range");
    return specfun::fox_wright_1psi0({c, k, -a, false}, policy);
}

SeriesValue psi_starred(double c, double k, double a, const TruncationPolicy& policy) {
    return specfun::fox_wright_1psi0({c, k, -a, true}, policy);
}

}  // namespace

SeriesValue raw_moment_series(const Theta& theta, double r, const TruncationPolicy& policy) {
    theta.validate();
    policy.validate();
    const double lam = theta.lambda;
    const double k = theta.k;
    const double alpha = theta.alpha;
    if (!(r > -alpha)) throw DomainError("raw_moment_series: requires r > -alpha");

    if (k == 1.0) {
        SeriesValue out;
        out.value = specfun::pochhammer(alpha, r) * std::pow(lam + theta.beta, -r);
        out.terms_used = 1;
        out.converged = true;
        return out;
    }

    const double a = theta.beta / std::pow(lam, k);
    const double log_a = std::log(a);
    const double scale = std::exp(-r * std::log(lam) - specfun::log_gamma(alpha));
    const double nu = k - 1.0;
    const double rho = alpha - 1.0;

    double inner_tail = 0.0;
    bool inner_converged = true;
    std::vector<double> tails;  // inner tail contribution per outer index
    auto term = [&](std::size_t m) {
        const double mm = static_cast<double>(m);
        const double w = ((m % 2 == 0) ? 1.0 : -1.0) * std::exp(mm * log_a - std::lgamma(mm + 1.0)) * scale;
        const SeriesValue i1 = i_mu_series({r + alpha + k * mm, a, nu, rho}, policy);
        const SeriesValue i2 = i_mu_series({r + alpha + k * (mm + 1.0) - 1.0, a, nu, rho}, policy);
        if (tails.size() <= m) tails.resize(m + 1);
        tails[m] = std::fabs(w) * (i1.tail_estimate + a * k * i2.tail_estimate);
        inner_converged = inner_converged && i1.converged && i2.converged;
        return w * (i1.value + a * k * i2.value);
    };

    SeriesOptions opts;
    // For k > 1 the Maclaurin sum over exp(-beta x^k) is only asymptotic.
    opts.detect_divergence = k > 1.0;
    SeriesValue out = sum_series(term, policy, opts);
    for (std::size_t m = 0; m < out.terms_used && m < tails.size(); ++m) inner_tail += tails[m];
    out.tail_estimate += inner_tail;
    out.converged = out.converged && inner_converged;
    return out;
}

SeriesValue raw_moment_integer_alpha(const Theta& theta, double r, const TruncationPolicy& policy, OxForm form) {
    theta.validate();
    policy.validate();
    const double alpha_d = theta.alpha;
    if (!(alpha_d >= 1.0) || !sd::near_integer(alpha_d, 1e-9))
        throw DomainError("raw_moment_integer_alpha: requires integer alpha >= 1");
    const auto alpha = static_cast<int>(std::lround(alpha_d));
    const double k = theta.k;
    const double lam = theta.lambda;
    if (!(r > std::max(-alpha_d, 1.0 - alpha_d - k)))
        throw DomainError("raw_moment_integer_alpha: requires r > max(-alpha, 1 - alpha - k)");
    const double a = theta.beta / std::pow(lam, k);

    SeriesValue out;
    out.converged = true;
    CompensatedSum sum;

    if (form == OxForm::corrected) {
        // lambda^{-r}/Gamma(alpha) sum_n C(alpha-1, n) a^n
        //   [Psi((c, k); -a) + k a Psi((c + k - 1, k); -a)],  c = r + alpha + (k-1) n
        const double scale = std::pow(lam, -r) / std::tgamma(alpha_d);
        for (int n = 0; n < alpha; ++n) {
            const double c = r + alpha_d + (k - 1.0) * n;
            const double w = scale * sd::binomial(alpha_d - 1.0, static_cast<std::size_t>(n)) * std::pow(a, n);
            accumulate(out, sum, w, psi_unstarred(c, k, a, policy));
            accumulate(out, sum, w * k * a, psi_unstarred(c + k - 1.0, k, a, policy));
        }
    } else {
        const double s1 = gamma_ratio(r, alpha_d) * std::pow(lam, -r);
        const double s2 = gamma_ratio(r + k - 1.0, alpha_d) * std::pow(lam, -(r + k));
        double rising = 1.0;  // (1 - alpha)_n / n! (-a)^n
        for (int n = 0; n < alpha; ++n) {
            if (n > 0) rising *= (1.0 - alpha_d + n - 1.0) / n * (-a);
            const double w1 = s1 * rising * gamma_ratio(r + alpha_d, k * n);
            const double w2 = s2 * rising * gamma_ratio(r + alpha_d + k - 1.0, k * n);
            accumulate(out, sum, w1, psi_starred(r + alpha_d + (k - 1.0) * n, k, a, policy));
            accumulate(out, sum, w2, psi_starred(r + alpha_d - 1.0 + k * (n + 1.0), k, a, policy));
        }
    }
    out.value = sum.value();
    return out;
}

}  // namespace geew
