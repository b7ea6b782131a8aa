#pragma once

#include <cstddef>
#include <limits>

#include "geew/oracle/quadrature.hpp"
#include "geew/specfun.hpp"

namespace geew::oracle {

struct ContourSpec {
    /// Abscissa of the vertical line; NaN selects the midpoint between the
    /// rightmost pole of Gamma(1 - a1 + s) and the leftmost pole of the
    /// Gamma(b_j - s) factors.
    double real_part = std::numeric_limits<double>::quiet_NaN();
    double half_height = 40.0;
    /// Initial equal pieces of [0, half_height] before adaptive refinement.
    std::size_t nodes = 8;
};

struct ContourResult : QuadratureResult {
    /// (1/2pi) int Im(integrand) over the full line; zero for real parameters.
    double imag_part = 0.0;
    /// |integrand| at the truncation height exceeded the tolerance.
    bool tail_warning = false;
};

/// Abscissa used when spec.real_part is NaN. Throws std::domain_error when no
/// vertical line separates the two pole families.
double default_abscissa(const specfun::MeijerG1331Params& p);

/// G^{3,1}_{1,3}(z | a1; b1, b2, b3) by direct quadrature of the
/// Mellin-Barnes integral along Re s = c, using conjugate symmetry.
ContourResult mellin_barnes_g1331(const specfun::MeijerG1331Params& p, const ContourSpec& c = {},
                                  double rel_tol = 1e-12);

}  // namespace geew::oracle
