#pragma once

#include <cstddef>
#include <functional>

namespace geew::oracle {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
    bool converged = false;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    /// Absolute error that is always acceptable (for integrals near zero).
    double abs_tol = 0.0;
    std::size_t max_subdivisions = 5000;
    /// Number of equal pieces the (transformed) interval starts from.
    std::size_t initial_pieces = 2;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]; the interval with the largest
/// |K15 - G7| is bisected until the summed estimate meets the tolerance.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// int_lower^inf f(x) dx through x = lower + t/(1-t); the first split lands on
/// t = 1/2, i.e. x = lower + 1.
QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f, double lower = 0.0,
                                        const QuadratureOptions& opts = {});

/// int_0^inf f(x) dx to relative tolerance tol.
QuadratureResult quadrature_semiinfinite(const std::function<double(double)>& f, double tol);

}  // namespace geew::oracle
