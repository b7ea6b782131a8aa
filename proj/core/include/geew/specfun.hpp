#pragma once

// Special-function kernels: incomplete gammas, Kummer 1F1, generalized
// Pochhammer, Lambert W, Fox-Wright 1Psi0 / 2Psi0 (polynomial case),
// Whittaker W and the Meijer G^{3,1}_{1,3} instance.
//
// Every function is pure and thread-safe. Infinite series return a
// SeriesValue so callers can see truncation diagnostics.

#include <cstddef>

#include "geew/error.hpp"
#include "geew/series.hpp"

namespace geew::specfun {

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

/// log|Gamma(x)|; +inf at the poles.
double log_gamma(double x);
/// log|Gamma(x)| and the sign of Gamma(x) (0 at poles).
double log_gamma(double x, int& sign);
/// 1/Gamma(x), exactly 0 at non-positive integers.
double reciprocal_gamma(double x);

/// (a)_s = Gamma(a+s)/Gamma(a) for a > 0, a + s > 0.
double pochhammer(double a, double s);

/// gamma(a, z) = int_0^z t^{a-1} e^{-t} dt, a > 0, z >= 0.
double lower_incomplete_gamma(double a, double z);
/// Gamma(a, z) = int_z^inf t^{a-1} e^{-t} dt, a > 0, z >= 0.
double upper_incomplete_gamma(double a, double z);
/// Q(a, z) = Gamma(a, z)/Gamma(a), in [0, 1].
double regularized_gamma_q(double a, double z);
/// P(a, z) = gamma(a, z)/Gamma(a) = 1 - Q(a, z), computed without the
/// subtraction where that would cancel.
double regularized_gamma_p(double a, double z);

/// z with Q(a, z) = q, for 0 < q < 1.
double inverse_regularized_gamma_q(double a, double q);
/// z with P(a, z) = p, for 0 < p < 1.
double inverse_regularized_gamma_p(double a, double p);

// ---------------------------------------------------------------------------
// Hypergeometric-type series
// ---------------------------------------------------------------------------

/// 1F1(a; b; z) = sum (a)_n/(b)_n z^n/n!. b must not be a non-positive
/// integer. Large negative z goes through Kummer's transformation.
SeriesValue kummer_1f1(double a, double b, double z,
                       const TruncationPolicy& policy = {});

/// Principal branch of Lambert W on [0, inf).
double lambert_w_principal(double x);

struct FoxWright1Psi0Params {
    double a = 0.0;  ///< upper parameter
    double A = 1.0;  ///< upper scale, > 0
    double z = 0.0;
    /// starred: sum (a)_{An} z^n/n!; unstarred multiplies by Gamma(a).
    bool starred = true;
};

/// Fox-Wright 1Psi0 (or 1Psi0*). Convergent for A < 1 (all z) and for
/// A = 1 with |z| < 1. For A > 1 the series diverges for every z != 0;
/// with policy.allow_asymptotic it is optimally truncated at its smallest
/// term (result.asymptotic is set), otherwise DivergenceError.
SeriesValue fox_wright_1psi0(const FoxWright1Psi0Params& p,
                             const TruncationPolicy& policy = {});

/// Gamma(mu) * 2Psi0*[(-rho,1),(mu,nu); -a] for integer rho >= 0, i.e.
/// sum_{n<=rho} C(rho,n) a^n Gamma(mu + nu n). Equals
/// int_0^inf x^{mu-1}(1 + a x^nu)^rho e^{-x} dx.
double fox_wright_2psi0_polynomial(int rho, double mu, double nu, double a);

struct WhittakerParams {
    double a = 0.0;  ///< first index
    double b = 0.0;  ///< second index
    double z = 1.0;  ///< argument, > 0
};

struct WhittakerOptions {
    /// Evaluate at b +/- eps_b and average when 2b is within eps_b of an
    /// integer. Accuracy degrades to O(eps_b).
    bool perturbation = false;
    double eps_b = 1e-5;
    TruncationPolicy policy{};
};

/// W_{a,b}(z) through the two-term 1F1 connection formula (2b not integer).
/// The two terms exceed W by about e^z z^{-2a}, which bounds the attainable
/// relative accuracy for large z.
double whittaker_w(const WhittakerParams& p, const WhittakerOptions& opts = {});

struct MeijerG1331Params {
    double a1 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double z = 1.0;  ///< > 0
};

struct MeijerGOptions {
    /// Lower parameters closer than this to an integer difference are
    /// rejected (logarithmic case).
    double pole_tol = 1e-6;
};

/// G^{3,1}_{1,3}(z | a1; b1, b2, b3) by residue summation over the poles
/// s = b_j + l of the three Gamma(b_j - s) factors.
SeriesValue meijer_g_1331(const MeijerG1331Params& p,
                          const TruncationPolicy& policy = {},
                          const MeijerGOptions& opts = {});

// ---------------------------------------------------------------------------
// Log-domain helpers shared with the distribution and identity code.
// ---------------------------------------------------------------------------
namespace detail {

/// log gamma(a, z) for a > 0, z > 0.
double log_lower_incomplete_gamma(double a, double z);
/// log Gamma(a, z) for any real a and z > 0 (analytic continuation in a;
/// Gamma(a, z) > 0 there).
double log_upper_incomplete_gamma(double a, double z);
/// Gamma(a, z) for a <= 0 by the recurrence
/// Gamma(a, z) = (Gamma(a+1, z) - z^a e^{-z})/a, starting from the
/// fractional part. Reference path for tests.
double upper_incomplete_gamma_by_recurrence(double a, double z);
/// log Gamma(1 + eps), accurate for small |eps|.
double log_gamma_1p(double eps);
/// log((a)_s) with sign, for general real a, s with a, a+s not poles.
double log_pochhammer(double a, double s, int& sign);
/// Real binomial coefficient C(rho, n) = (-1)^n (-rho)_n / n!.
double binomial(double rho, std::size_t n);
/// |x - round(x)| <= tol.
bool near_integer(double x, double tol);

}  // namespace detail

}  // namespace geew::specfun
