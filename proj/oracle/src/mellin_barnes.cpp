#include "geew/oracle/mellin_barnes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace geew::oracle {

namespace {

using cplx = std::complex<double>;

// Lanczos (g = 7, n = 9) log Gamma with reflection; independent of the
// library's real-axis gamma code.
cplx log_gamma(cplx z) {
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    static constexpr double c[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                    771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    z -= 1.0;
    cplx x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

cplx integrand(const specfun::MeijerG1331Params& p, double log_z, cplx s) {
    const cplx lg = log_gamma(p.b1 - s) + log_gamma(p.b2 - s) + log_gamma(p.b3 - s) + log_gamma(1.0 - p.a1 + s);
    return std::exp(lg + s * log_z);
}

}  // namespace

double default_abscissa(const specfun::MeijerG1331Params& p) {
    const double left = p.a1 - 1.0;
    const double right = std::min({p.b1, p.b2, p.b3});
    if (!(left < right))
        throw std::domain_error("mellin_barnes_g1331: no vertical contour separates the pole families");
    return 0.5 * (left + right);
}

ContourResult mellin_barnes_g1331(const specfun::MeijerG1331Params& p, const ContourSpec& spec, double rel_tol) {
    if (!(p.z > 0.0)) throw std::domain_error("mellin_barnes_g1331: requires z > 0");
    if (!(spec.half_height > 0.0)) throw std::domain_error("mellin_barnes_g1331: requires half_height > 0");
    const double c = std::isnan(spec.real_part) ? default_abscissa(p) : spec.real_part;
    const double right = std::min({p.b1, p.b2, p.b3});
    if (!(c > p.a1 - 1.0 && c < right))
        throw std::domain_error("mellin_barnes_g1331: contour abscissa collides with or crosses a pole");
    const double log_z = std::log(p.z);
    const double H = spec.half_height;

    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    opts.initial_pieces = spec.nodes == 0 ? 1 : spec.nodes;
    opts.max_subdivisions = 20000;

    // (1/2 pi i) int g ds over s = c + i t equals (1/pi) int_0^H Re g dt by conjugate symmetry.
    const QuadratureResult re = integrate(
        [&](double t) { return integrand(p, log_z, cplx(c, t)).real() / std::numbers::pi; }, 0.0, H, opts);

    ContourResult out;
    out.value = re.value;
    out.error_estimate = re.error_estimate;
    out.subdivisions = re.subdivisions;
    out.converged = re.converged;

    QuadratureOptions im_opts = opts;
    im_opts.abs_tol = rel_tol * std::fabs(re.value);
    const QuadratureResult im = integrate(
        [&](double t) { return integrand(p, log_z, cplx(c, t)).imag() / (2.0 * std::numbers::pi); }, -H, H,
        im_opts);
    out.imag_part = im.value;

    const double edge = std::abs(integrand(p, log_z, cplx(c, H))) / std::numbers::pi;
    out.tail_warning = edge > rel_tol * std::fabs(re.value);
    return out;
}

}  // namespace geew::oracle
