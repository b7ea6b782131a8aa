#include <cmath>

#include "geew/specfun.hpp"

namespace geew::specfun {

double lambert_w_principal(double x) {
    if (!(x >= 0.0)) throw DomainError("lambert_w_principal: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    double w = std::log1p(x);
    for (int it = 0; it < 50; ++it) {
        // f / e^w with f = w e^w - x, kept in scaled form to avoid overflow
        const double t = w - x * std::exp(-w);
        const double step = t / ((w + 1.0) - (w + 2.0) * t / (2.0 * w + 2.0));
        w -= step;
        if (std::fabs(step) <= 1e-15 * std::fabs(w)) return w;
    }
    throw ConvergenceError("lambert_w_principal: Halley iteration did not converge");
}

}  // namespace geew::specfun
