#include "geew/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "geew/error.hpp"

namespace geew {

namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void Theta::validate() const {
    if (!positive_finite(lambda) || !positive_finite(beta) || !positive_finite(k) || !positive_finite(alpha))
        throw DomainError("Theta: lambda, beta, k and alpha must all be finite and > 0");
}

double Theta::h(double x) const {
    if (x <= 0.0) return 0.0;
    return lambda * x + beta * std::pow(x, k);
}

double Theta::h_prime(double x) const {
    if (x <= 0.0) {
        if (k < 1.0) return std::numeric_limits<double>::infinity();
        if (k == 1.0) return lambda + beta;
        return lambda;
    }
    return lambda + beta * k * std::pow(x, k - 1.0);
}

double Theta::h_inverse(double y) const {
    if (!(y >= 0.0)) throw DomainError("Theta::h_inverse: requires y >= 0");
    if (y == 0.0) return 0.0;
    if (std::isinf(y)) return y;
    if (k == 1.0) return y / (lambda + beta);
    // max(lx, bx^k) <= h(x) <= 2 max(lx, bx^k) pins the root within a
    // constant factor, however small y is
    double lo = std::min(y / (2.0 * lambda), std::pow(y / (2.0 * beta), 1.0 / k));
    double hi = std::min(y / lambda, std::pow(y / beta, 1.0 / k));
    if (!(lo > 0.0)) lo = std::numeric_limits<double>::denorm_min();
    for (int it = 0; it < 8; ++it) {
        const double mid = std::sqrt(lo) * std::sqrt(hi);
        if (h(mid) < y) lo = mid; else hi = mid;
    }
    double x = std::sqrt(lo) * std::sqrt(hi);
    for (int it = 0; it < 100; ++it) {
        const double fx = h(x) - y;
        if (fx == 0.0) return x;
        if (fx < 0.0) lo = x; else hi = x;
        double next = x - fx / h_prime(x);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 2e-16 * x || hi - lo <= 2e-16 * hi) return next;
        x = next;
    }
    return x;
}

HSpec HSpec::geew(const Theta& theta) {
    theta.validate();
    return {[theta](double x) { return theta.h(x); }, [theta](double x) { return theta.h_prime(x); }};
}

double generalized_inverse(const HSpec& spec, double y) {
    if (!(y >= 0.0)) throw DomainError("generalized_inverse: requires y >= 0");
    if (spec.h(0.0) >= y) return 0.0;
    double hi = 1.0;
    int grow = 0;
    while (spec.h(hi) < y) {
        hi *= 2.0;
        if (++grow > 2000) throw DomainError("generalized_inverse: h stays below y");
    }
    double lo = 0.0;
    for (int it = 0; it < 2000 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (spec.h(mid) >= y) hi = mid; else lo = mid;
    }
    return hi;
}

}  // namespace geew
