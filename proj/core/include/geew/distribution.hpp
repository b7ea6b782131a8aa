#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "geew/series.hpp"
#include "geew/theta.hpp"

namespace geew {

// ---------------------------------------------------------------------------
// GE(alpha, h) and GEEW(theta): density, distribution, quantile
// ---------------------------------------------------------------------------

enum class CdfRoute { gamma_q, kummer };

/// Density h'(x) h(x)^{alpha-1} e^{-h(x)} / Gamma(alpha) on x > 0, else 0.
/// At x = 0 with alpha < 1 (or k < 1 and alpha = 1) returns +inf.
double geew_pdf(const Theta& theta, double x);
/// 1 - Q(alpha, h(x)) or its 1F1 form h^alpha/Gamma(alpha+1) 1F1(alpha; alpha+1; -h).
double geew_cdf(const Theta& theta, double x, CdfRoute route = CdfRoute::gamma_q);
/// Q(alpha, h(x)) without the 1 - F cancellation.
double geew_survival(const Theta& theta, double x);
/// x with F(x) = p, 0 < p < 1.
double geew_quantile(const Theta& theta, double p);

double ge_pdf(double alpha, const HSpec& h, double x);
double ge_cdf(double alpha, const HSpec& h, double x);

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Seeded 64-bit Mersenne Twister with library-independent uniform and
/// normal transforms, so sequences are reproducible across toolchains.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}
    /// Uniform on the open interval (0, 1).
    double uniform();
    double normal();
    /// Gamma(alpha, 1) variate.
    double gamma(double alpha);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// X = h^{-1}(Y) with Y ~ Gamma(alpha, 1).
std::vector<double> geew_sample(const Theta& theta, std::size_t n, Generator& gen);
std::vector<double> geew_sample(const Theta& theta, std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Moments
// ---------------------------------------------------------------------------

/// E (lambda X + beta X^k)^s = (alpha)_s, s > -alpha.
double transformed_moment(double alpha, double s);

struct TiltParams {
    double sigma = 0.0;
    double s = 0.0;
};

/// E h(X)^s exp(sigma s h(X)) = (alpha)_s (1 - sigma s)^{-(alpha+s)}
/// for -alpha < s < 1/sigma.
double tilted_moment(double alpha, const TiltParams& t);

/// CDF of h(X) exp(sigma h(X)): P(alpha, W(sigma x)/sigma).
double upsilon_cdf(const Theta& theta, double sigma, double x);

struct IMuParams {
    double mu = 1.0;
    double a = 1.0;
    double nu = 1.0;
    double rho = 1.0;
};

enum class ConditionCheck { advisory, strict };

/// rho + (l + mu)/nu is not within tol of a natural number for l = 1..horizon.
bool lemma_condition_holds(const IMuParams& p, std::size_t horizon = 1000, double tol = 1e-9);

/// I_mu(a, nu, rho) = int_0^inf x^{mu-1} (1 + a x^nu)^rho e^{-x} dx by the
/// split binomial series in incomplete gamma functions around x = a^{-1/nu}.
/// nu < 0 is accepted (the expansions swap sides; needs mu + nu rho > 0) and
/// nu = 0 is closed form. With ConditionCheck::strict the parameter
/// condition is enforced (DomainError).
SeriesValue i_mu_series(const IMuParams& p, const TruncationPolicy& policy = {},
                        ConditionCheck check = ConditionCheck::advisory);

/// E X^r as the outer Maclaurin sum over exp(-beta x^k) of two I_mu terms.
/// k = 1 is closed form. For k > 1 the outer sum is divergent and is
/// optimally truncated (result.asymptotic set).
SeriesValue raw_moment_series(const Theta& theta, double r, const TruncationPolicy& policy = {});

enum class OxForm { corrected, printed };

/// E X^r for integer alpha as a finite sum of Fox-Wright 1Psi0 values with
/// A = k. Needs k < 1, or k = 1 with beta < lambda, unless
/// policy.allow_asymptotic. OxForm::printed evaluates the historical
/// coefficient layout, which does not equal E X^r in general (at alpha = 1
/// only when r = 1 and beta Gamma(1 + k) = 1).
SeriesValue raw_moment_integer_alpha(const Theta& theta, double r, const TruncationPolicy& policy = {},
                                     OxForm form = OxForm::corrected);

}  // namespace geew
