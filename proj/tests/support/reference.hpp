#pragma once

// Independent references shared by the unit and acceptance tests. The GEEW
// density is spelled out here from its definition instead of being taken
// from the library, so quadrature checks do not reuse main-path code.

#include <cmath>
#include <functional>
#include <limits>

#include "geew/oracle/quadrature.hpp"
#include "geew/theta.hpp"

namespace geew::test {

inline double ref_log_pdf(const Theta& t, double x) {
    const double h = t.lambda * x + t.beta * std::pow(x, t.k);
    const double hp = t.lambda + t.beta * t.k * std::pow(x, t.k - 1.0);
    return std::log(hp) + (t.alpha - 1.0) * std::log(h) - h - std::lgamma(t.alpha);
}

inline double ref_pdf(const Theta& t, double x) { return x > 0.0 ? std::exp(ref_log_pdf(t, x)) : 0.0; }

/// int_0^inf g(x) f(x) dx for the GEEW density f.
inline oracle::QuadratureResult ref_expectation(const Theta& t, const std::function<double(double)>& g,
                                                double rel_tol = 1e-12) {
    oracle::QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    opts.max_subdivisions = 20000;
    return oracle::integrate_semiinfinite([&](double x) { return x > 0.0 ? g(x) * ref_pdf(t, x) : 0.0; },
                                          0.0, opts);
}

/// Same, with the weight given as log g so exponential tilts cannot overflow.
inline oracle::QuadratureResult ref_log_expectation(const Theta& t, const std::function<double(double)>& log_g,
                                                    double rel_tol = 1e-12) {
    oracle::QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    opts.max_subdivisions = 20000;
    return oracle::integrate_semiinfinite(
        [&](double x) { return x > 0.0 ? std::exp(log_g(x) + ref_log_pdf(t, x)) : 0.0; }, 0.0, opts);
}

inline double ref_raw_moment(const Theta& t, double r) {
    return ref_expectation(t, [r](double x) { return std::pow(x, r); }).value;
}

/// lambda E X + beta E X^k by quadrature.
inline double ref_moment_route(const Theta& t) {
    return ref_expectation(t, [&](double x) { return t.lambda * x + t.beta * std::pow(x, t.k); }).value;
}

inline double rel_diff(double a, double b) {
    const double d = std::fabs(a - b);
    const double s = std::fabs(b);
    return s > std::numeric_limits<double>::min() ? d / s : d;
}

}  // namespace geew::test
