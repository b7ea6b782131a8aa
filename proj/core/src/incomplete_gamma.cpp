#include <cmath>
#include <limits>
#include <string>

#include "geew/specfun.hpp"

namespace geew::specfun {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kIterEps = 1e-17;
constexpr int kMaxIter = 100'000;
constexpr double kEulerGamma = 0.5772156649015329;

void check_args(const char* fn, double a, double z) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError(std::string(fn) + ": requires finite a > 0");
    if (!(z >= 0.0)) throw DomainError(std::string(fn) + ": requires z >= 0");
}

// Power series is used below the transition, the Legendre continued fraction
// above it. For a < 1 the fraction is already efficient from z = 1.
bool use_continued_fraction(double a, double z) { return z >= a + 1.0 || (a < 1.0 && z >= 1.0); }

// sum_{n>=0} z^n / ((a+1)...(a+n)); gamma(a,z) = z^a e^{-z} / a * S
double lower_series(double a, double z) {
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < kMaxIter; ++n) {
        term *= z / (a + n);
        sum += term;
        if (term < sum * kIterEps) return sum;
    }
    throw ConvergenceError("incomplete gamma series did not converge");
}

// Modified Lentz evaluation of the Legendre fraction; Gamma(a,z) = z^a e^{-z} h.
// Valid for every real a when z > 0.
double upper_fraction(double a, double z) {
    double b = z + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kIterEps * 10) return h;
    }
    throw ConvergenceError("incomplete gamma continued fraction did not converge");
}

// Gamma(e, z) for e in (-1, 1) and 0 < z <= 1 from
// Gamma(e,z) = (Gamma(1+e) - z^e)/e - sum_{k>=1} (-1)^k z^{k+e} / (k! (k+e)).
double upper_small_parameter(double e, double z) {
    const double lz = std::log(z);
    double lead = 0.0;
    if (e == 0.0) {
        lead = -kEulerGamma - lz;
    } else if (std::fabs(e) < 0.25) {
        lead = (std::expm1(detail::log_gamma_1p(e)) - std::expm1(e * lz)) / e;
    } else {
        lead = (std::tgamma(1.0 + e) - std::exp(e * lz)) / e;
    }
    CompensatedSum tail;
    double zk = 1.0;  // z^k / k!
    for (int k = 1; k < 400; ++k) {
        zk *= z / k;
        const double t = ((k % 2 == 0) ? 1.0 : -1.0) * zk / (k + e);
        tail.add(t);
        if (std::fabs(t) < 1e-18) break;
    }
    return lead - std::exp(e * lz) * tail.value();
}

struct PQ {
    double p;
    double q;
};

PQ regularized_pq(double a, double z) {
    if (z == 0.0) return {0.0, 1.0};
    if (std::isinf(z)) return {1.0, 0.0};
    if (!use_continued_fraction(a, z)) {
        const double p = std::exp(a * std::log(z) - z - log_gamma(a + 1.0)) * lower_series(a, z);
        // 1 - p cancels as a -> 0
        if (a < 1.0) return {p, upper_small_parameter(a, z) * reciprocal_gamma(a)};
        return {p, 1.0 - p};
    }
    const double q = std::exp(a * std::log(z) - z - log_gamma(a)) * upper_fraction(a, z);
    return {1.0 - q, q};
}

}  // namespace

namespace detail {

double log_lower_incomplete_gamma(double a, double z) {
    if (!(a > 0.0)) throw DomainError("log_lower_incomplete_gamma: requires a > 0");
    if (!(z > 0.0)) throw DomainError("log_lower_incomplete_gamma: requires z > 0");
    if (!use_continued_fraction(a, z))
        return a * std::log(z) - z - std::log(a) + std::log(lower_series(a, z));
    const double lg = log_gamma(a);
    const double q = std::exp(a * std::log(z) - z - lg) * upper_fraction(a, z);
    return lg + std::log1p(-q);
}

double log_upper_incomplete_gamma(double a, double z) {
    if (!(z > 0.0)) throw DomainError("log_upper_incomplete_gamma: requires z > 0");
    if (std::isinf(z)) return -std::numeric_limits<double>::infinity();
    if (a > 0.0) {
        if (use_continued_fraction(a, z)) return a * std::log(z) - z + std::log(upper_fraction(a, z));
        // Gamma(a) - gamma(a, z) cancels as a -> 0
        if (a < 1.0) return std::log(upper_small_parameter(a, z));
        const double lg = log_gamma(a);
        const double p = std::exp(a * std::log(z) - z - log_gamma(a + 1.0)) * lower_series(a, z);
        return lg + std::log1p(-p);
    }
    // a <= 0
    if (z >= 1.0 || z + 1.0 - a >= 12.0) return a * std::log(z) - z + std::log(upper_fraction(a, z));
    // Scaled recurrence G(c) = Gamma(c,z) z^{-c} e^{z}:  G(c-1) = (1 - z G(c)) / (1 - c)
    // start in (-0.25, 0.75] so the first step never divides by 1 - c ~ 0
    double fl = std::floor(a);
    double frac = a - fl;
    if (frac > 0.75) {
        fl += 1.0;
        frac -= 1.0;
    }
    const auto steps = static_cast<long>(-fl);
    double g = upper_small_parameter(frac, z) * std::exp(z - frac * std::log(z));
    double c = frac;
    for (long j = 0; j < steps; ++j) {
        g = (1.0 - z * g) / (1.0 - c);
        c -= 1.0;
    }
    return a * std::log(z) - z + std::log(g);
}

double upper_incomplete_gamma_by_recurrence(double a, double z) {
    if (!(z > 0.0)) throw DomainError("upper_incomplete_gamma_by_recurrence: requires z > 0");
    if (a > 0.0) return upper_incomplete_gamma(a, z);
    const double fl = std::floor(a);
    const double frac = a - fl;
    const auto steps = static_cast<long>(-fl);
    double gval = 0.0;
    if (frac == 0.0) {
        // E1(z) = Gamma(0, z)
        gval = z < 1.0 ? upper_small_parameter(0.0, z) : std::exp(-z) * upper_fraction(0.0, z);
    } else {
        gval = upper_incomplete_gamma(frac, z);
    }
    double c = frac;
    for (long j = 0; j < steps; ++j) {
        // Gamma(c-1, z) = (Gamma(c, z) - z^{c-1} e^{-z}) / (c - 1)
        gval = (gval - std::exp((c - 1.0) * std::log(z) - z)) / (c - 1.0);
        c -= 1.0;
    }
    return gval;
}

}  // namespace detail

double regularized_gamma_q(double a, double z) {
    check_args("regularized_gamma_q", a, z);
    return regularized_pq(a, z).q;
}

double regularized_gamma_p(double a, double z) {
    check_args("regularized_gamma_p", a, z);
    return regularized_pq(a, z).p;
}

double lower_incomplete_gamma(double a, double z) {
    check_args("lower_incomplete_gamma", a, z);
    if (z == 0.0) return 0.0;
    if (a < 170.0) return std::tgamma(a) * regularized_pq(a, z).p;
    return std::exp(detail::log_lower_incomplete_gamma(a, z));
}

double upper_incomplete_gamma(double a, double z) {
    check_args("upper_incomplete_gamma", a, z);
    if (z == 0.0) return std::tgamma(a);
    if (a < 170.0) return std::tgamma(a) * regularized_pq(a, z).q;
    return std::exp(detail::log_upper_incomplete_gamma(a, z));
}

// ---------------------------------------------------------------------------
// Inversion
// ---------------------------------------------------------------------------

namespace {

// Acklam's rational approximation to the standard normal quantile, refined by
// one Halley step on erfc.
double normal_quantile(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double plow = 0.02425;
    double x = 0.0;
    if (p < plow) {
        const double q = std::sqrt(-2 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    } else if (p <= 1 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
        const double q = std::sqrt(-2 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2 * M_PI) * std::exp(x * x / 2);
    return x - u / (1 + x * u / 2);
}

// Solves P(a,z) = target (lower = true) or Q(a,z) = target with target <= 0.5,
// by safeguarded Newton iteration on log P or log Q.
double invert_tail(double a, double target, bool lower) {
    const double lg = log_gamma(a);
    const double log_target = std::log(target);

    // initial guess
    double z = 0.0;
    const double p_equiv = lower ? target : 1.0 - target;
    if (a > 1.0) {
        const double x = lower ? normal_quantile(target) : -normal_quantile(target);
        const double w = 1.0 - 1.0 / (9.0 * a) + x / (3.0 * std::sqrt(a));
        z = a * w * w * w;
        if (!(z > 0.0)) z = std::exp((std::log(p_equiv) + log_gamma(a + 1.0)) / a);
    } else {
        const double t = 1.0 - a * (0.253 + a * 0.12);
        if (lower && target < t) {
            const double log_z = (std::log(target) + log_gamma(a + 1.0)) / a;
            // P ~ z^a / Gamma(a+1) is exact to rounding when the root is this small
            if (log_z < -600.0) return std::exp(log_z);
            z = std::exp(log_z);
        } else if (!lower) {
            z = std::max(1e-3, -std::log(target) + (a - 1.0) * std::log(std::max(1.0, -std::log(target))) - lg);
        } else {
            z = 1.0 - std::log1p(-(target - t) / (1.0 - t));
        }
    }
    if (!(z > 0.0) || !std::isfinite(z)) z = std::max(a, 1e-3);

    auto log_f = [&](double x) {
        return lower ? detail::log_lower_incomplete_gamma(a, x) - lg
                     : detail::log_upper_incomplete_gamma(a, x) - lg;
    };

    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 300; ++it) {
        const double lf = log_f(z);
        const double g = lf - log_target;
        // P increases, Q decreases in z
        const bool too_big = lower ? g > 0.0 : g < 0.0;
        if (too_big) hi = z; else lo = z;
        if (g == 0.0) return z;
        // d log F / dz
        const double dens = std::exp((a - 1.0) * std::log(z) - z - lg - lf);
        const double dlog = lower ? dens : -dens;
        double next = z - g / dlog;
        if (!(next > lo && next < hi) || !std::isfinite(next)) {
            next = std::isinf(hi) ? 2.0 * z + 1.0 : (lo > 0.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi));
            if (lo == 0.0 && !std::isinf(hi)) next = 0.5 * hi;
        }
        if (std::fabs(next - z) <= 4e-16 * z) return next;
        if (!std::isinf(hi) && (hi - lo) <= 4e-16 * hi) return 0.5 * (lo + hi);
        z = next;
    }
    throw ConvergenceError("inverse regularized gamma did not converge");
}

}  // namespace

double inverse_regularized_gamma_q(double a, double q) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("inverse_regularized_gamma_q: requires a > 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("inverse_regularized_gamma_q: requires 0 < q < 1");
    if (q > 0.5) return invert_tail(a, 1.0 - q, true);
    return invert_tail(a, q, false);
}

double inverse_regularized_gamma_p(double a, double p) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("inverse_regularized_gamma_p: requires a > 0");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("inverse_regularized_gamma_p: requires 0 < p < 1");
    if (p > 0.5) return invert_tail(a, 1.0 - p, false);
    return invert_tail(a, p, true);
}

}  // namespace geew::specfun
