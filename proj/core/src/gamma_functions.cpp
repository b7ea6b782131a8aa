#include <cmath>
#include <math.h>  // lgamma_r, lgammal_r

#include <array>
#include <string>

#include "geew/specfun.hpp"

namespace geew::specfun {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;

// zeta(2) .. zeta(16)
constexpr std::array<double, 15> kZeta = {
    1.6449340668482264, 1.2020569031595942, 1.0823232337111381, 1.03692775514337,
    1.0173430619844492, 1.008349277381923,  1.0040773561979444, 1.0020083928260821,
    1.000994575127818,  1.0004941886041194, 1.000246086553308,  1.0001227133475785,
    1.0000612481350588, 1.000030588236307,  1.0000152822594086,
};

double zeta_int(int k) {
    if (k >= 2 && k <= 16) return kZeta[static_cast<std::size_t>(k - 2)];
    double s = 1.0;
    for (int j = 2; j <= 6; ++j) s += std::pow(static_cast<double>(j), -k);
    return s;
}

// Stirling remainder of log Gamma(x); truncation error < 1e-16 for x >= 30.
double stirling_correction(double x) {
    const double ix = 1.0 / x;
    const double ix2 = ix * ix;
    return ix * (1.0 / 12.0 - ix2 * (1.0 / 360.0 - ix2 * (1.0 / 1260.0 - ix2 * (1.0 / 1680.0))));
}

}  // namespace

double log_gamma(double x, int& sign) {
    if (x <= 0.0 && x == std::floor(x)) {
        sign = 0;
        return std::numeric_limits<double>::infinity();
    }
    int s = 1;
    const double v = ::lgamma_r(x, &s);
    sign = s;
    return v;
}

double log_gamma(double x) {
    int sign = 0;
    return log_gamma(x, sign);
}

double reciprocal_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x > 0.0 && x < 170.0) return 1.0 / std::tgamma(x);
    int sign = 0;
    const double lg = log_gamma(x, sign);
    return sign * std::exp(-lg);
}

namespace detail {

bool near_integer(double x, double tol) { return std::fabs(x - std::round(x)) <= tol; }

double log_gamma_1p(double eps) {
    if (std::fabs(eps) > 0.25) return log_gamma(1.0 + eps);
    // log Gamma(1+e) = -gamma e + sum_{k>=2} (-e)^k zeta(k)/k
    double sum = -kEulerGamma * eps;
    double p = -eps;  // (-eps)^k
    for (int k = 2; k < 60; ++k) {
        p *= -eps;
        const double t = p * zeta_int(k) / k;
        sum += t;
        if (std::fabs(t) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

double log_pochhammer(double a, double s, int& sign) {
    if (s == 0.0) {
        sign = 1;
        return 0.0;
    }
    int s1 = 0;
    int s2 = 0;
    if (a > 30.0 && a + s > 30.0) {
        // difference of Stirling expansions avoids cancelling two large lgammas
        const double b = a + s;
        const double main = (a - 0.5) * std::log1p(s / a) + s * std::log(b) - s;
        sign = 1;
        return main + stirling_correction(b) - stirling_correction(a);
    }
    const double lb = log_gamma(a + s, s1);
    const double la = log_gamma(a, s2);
    if (s2 == 0) throw DomainError("log_pochhammer: a is a pole of Gamma");
    if (s1 == 0) {
        sign = 0;
        return -std::numeric_limits<double>::infinity();
    }
    sign = s1 * s2;
    return lb - la;
}

double binomial(double rho, std::size_t n) {
    double c = 1.0;
    for (std::size_t j = 0; j < n; ++j) c *= (rho - static_cast<double>(j)) / static_cast<double>(j + 1);
    return c;
}

}  // namespace detail

double pochhammer(double a, double s) {
    if (!(a > 0.0)) throw DomainError("pochhammer: requires a > 0");
    if (!(a + s > 0.0)) throw DomainError("pochhammer: requires a + s > 0");
    if (s == 0.0) return 1.0;
    if (s == std::floor(s) && s > 0.0 && s <= 64.0) {
        double p = 1.0;
        for (int j = 0; j < static_cast<int>(s); ++j) p *= a + j;
        return p;
    }
    if (a < 170.0 && a + s < 170.0) return std::tgamma(a + s) / std::tgamma(a);
    // exp amplifies the absolute error of the log; the extended format keeps
    // it near one ulp of the result even when the log is in the hundreds
    int s1 = 0;
    int s2 = 0;
    const long double la = ::lgammal_r(static_cast<long double>(a), &s2);
    const long double lb = ::lgammal_r(static_cast<long double>(a) + static_cast<long double>(s), &s1);
    return static_cast<double>(std::exp(lb - la));
}

}  // namespace geew::specfun
