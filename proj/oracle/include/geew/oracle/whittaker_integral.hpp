#pragma once

#include "geew/oracle/quadrature.hpp"

namespace geew::oracle {

/// W_{a,b}(z) from the Laplace-type representation
///   z^{b+1/2} e^{-z/2} / Gamma(b-a+1/2) int_0^inf e^{-zt} t^{b-a-1/2} (1+t)^{b+a-1/2} dt,
/// valid for b - a + 1/2 > 0 and z > 0. Independent of the 1F1 connection formula.
QuadratureResult whittaker_w_integral(double a, double b, double z, double rel_tol = 1e-12);

}  // namespace geew::oracle
