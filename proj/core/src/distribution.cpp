#include "geew/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geew/error.hpp"
#include "geew/specfun.hpp"

namespace geew {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double density_from_h(double alpha, double hx, double dh) {
    if (hx <= 0.0) {
        if (alpha < 1.0) return kInf;
        if (alpha == 1.0) return dh;
        return 0.0;
    }
    if (std::isinf(dh)) return kInf;
    return std::exp(std::log(dh) + (alpha - 1.0) * std::log(hx) - hx - specfun::log_gamma(alpha));
}

// 1F1(alpha; alpha+1; -h) h^alpha / Gamma(alpha+1), with Kummer's transformation
// e^{-h} 1F1(1; alpha+1; h) summed in scaled form once e^{h} would overflow.
double cdf_kummer(double alpha, double hx) {
    const double lead = alpha * std::log(hx) - specfun::log_gamma(alpha + 1.0);
    if (hx <= 600.0) return std::exp(lead) * specfun::kummer_1f1(alpha, alpha + 1.0, -hx).value;
    // log of sum_n h^n / (alpha+1)_n, all terms positive
    double log_t = 0.0;
    double log_max = 0.0;
    double scaled = 1.0;  // sum exp(log_t - log_max)
    for (int n = 1; n < 1'000'000; ++n) {
        log_t += std::log(hx) - std::log(alpha + n);
        if (log_t > log_max) {
            scaled = scaled * std::exp(log_max - log_t) + 1.0;
            log_max = log_t;
        } else {
            const double r = std::exp(log_t - log_max);
            scaled += r;
            if (r < 1e-17 * scaled) break;
        }
    }
    return std::min(1.0, std::exp(lead - hx + log_max + std::log(scaled)));
}

}  // namespace

double geew_pdf(const Theta& theta, double x) {
    theta.validate();
    if (x < 0.0 || std::isnan(x)) return 0.0;
    if (std::isinf(x)) return 0.0;
    return density_from_h(theta.alpha, theta.h(x), theta.h_prime(x));
}

double geew_cdf(const Theta& theta, double x, CdfRoute route) {
    theta.validate();
    if (!(x > 0.0)) return 0.0;
    const double hx = theta.h(x);
    if (std::isinf(hx)) return 1.0;
    if (route == CdfRoute::kummer) return cdf_kummer(theta.alpha, hx);
    return specfun::regularized_gamma_p(theta.alpha, hx);
}

double geew_survival(const Theta& theta, double x) {
    theta.validate();
    if (!(x > 0.0)) return 1.0;
    return specfun::regularized_gamma_q(theta.alpha, theta.h(x));
}

double geew_quantile(const Theta& theta, double p) {
    theta.validate();
    if (!(p > 0.0 && p < 1.0)) throw DomainError("geew_quantile: requires 0 < p < 1");
    return theta.h_inverse(specfun::inverse_regularized_gamma_p(theta.alpha, p));
}

double ge_pdf(double alpha, const HSpec& h, double x) {
    if (!(alpha > 0.0)) throw DomainError("ge_pdf: requires alpha > 0");
    if (x < 0.0 || std::isnan(x)) return 0.0;
    return density_from_h(alpha, h.h(x), h.h_prime(x));
}

double ge_cdf(double alpha, const HSpec& h, double x) {
    if (!(alpha > 0.0)) throw DomainError("ge_cdf: requires alpha > 0");
    if (!(x > 0.0)) return 0.0;
    const double hx = h.h(x);
    if (hx <= 0.0) return 0.0;
    return specfun::regularized_gamma_p(alpha, hx);
}

double transformed_moment(double alpha, double s) {
    if (!(alpha > 0.0)) throw DomainError("transformed_moment: requires alpha > 0");
    if (!(s > -alpha)) throw DomainError("transformed_moment: requires s > -alpha");
    return specfun::pochhammer(alpha, s);
}

double tilted_moment(double alpha, const TiltParams& t) {
    if (!(t.sigma >= 0.0)) throw DomainError("tilted_moment: requires sigma >= 0");
    if (t.sigma == 0.0) return transformed_moment(alpha, t.s);
    if (!(t.s > -alpha) || !(t.sigma * t.s < 1.0))
        throw DomainError("tilted_moment: requires -alpha < s < 1/sigma");
    return specfun::pochhammer(alpha, t.s) * std::pow(1.0 - t.sigma * t.s, -(alpha + t.s));
}

double upsilon_cdf(const Theta& theta, double sigma, double x) {
    theta.validate();
    if (!(sigma > 0.0)) throw DomainError("upsilon_cdf: requires sigma > 0");
    if (!(x > 0.0)) return 0.0;
    return specfun::regularized_gamma_p(theta.alpha, specfun::lambert_w_principal(sigma * x) / sigma);
}

}  // namespace geew
