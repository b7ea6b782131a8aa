#include "geew/oracle/whittaker_integral.hpp"

#include <cmath>
#include <stdexcept>

namespace geew::oracle {

QuadratureResult whittaker_w_integral(double a, double b, double z, double rel_tol) {
    const double e = b - a + 0.5;
    if (!(e > 0.0)) throw std::domain_error("whittaker_w_integral: requires b - a + 1/2 > 0");
    if (!(z > 0.0)) throw std::domain_error("whittaker_w_integral: requires z > 0");
    const double p = e - 1.0;
    const double q = b + a - 0.5;
    auto f = [=](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp(-z * t + p * std::log(t) + q * std::log1p(t));
    };
    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    auto r = integrate_semiinfinite(f, 0.0, opts);
    const double scale = std::exp((b + 0.5) * std::log(z) - 0.5 * z - std::lgamma(e));
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

}  // namespace geew::oracle
