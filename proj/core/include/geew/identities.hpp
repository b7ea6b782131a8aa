#pragma once

#include <cstddef>
#include <string>

#include "geew/series.hpp"
#include "geew/specfun.hpp"
#include "geew/theta.hpp"

namespace geew {

enum class IdentityMode { convergent, asymptotic };

struct IdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    /// abs_residual / max(|rhs|, 1e-300)
    double rel_residual = 0.0;
    double lhs_tail_estimate = 0.0;
    std::size_t terms_used = 0;
    IdentityMode mode = IdentityMode::convergent;
    bool converged = false;
    /// Set for asymptotic mode and for heavy cancellation; see message.
    bool warning = false;
    std::string message;
};

enum class SummationOrder { row_major, diagonal };

/// Which coefficient layout identity_b evaluates.
enum class IdentityForm { printed, corrected };

struct IdentityCParams {
    double lambda = 1.0;
    double u = 1.0;
    double alpha = 0.5;
};

struct IdentityDParams {
    double lambda = 1.0;
    double b = 1.0;
    double alpha = 0.4;
};

/// Double incomplete-gamma series equal to 1 (alpha not an integer, k > 1).
/// The inner n-sum is accelerated per row; the outer m-sum is divergent for
/// every k > 1 and is optimally truncated (mode = asymptotic).
IdentityReport identity_a(const Theta& theta, const TruncationPolicy& policy = {},
                          SummationOrder order = SummationOrder::row_major);

/// Finite sum over n < alpha of Fox-Wright values equal to alpha (integer
/// alpha). Fox-Wright with A = k > 1 requires policy.allow_asymptotic.
IdentityReport identity_b(const Theta& theta, const TruncationPolicy& policy = {},
                          IdentityForm form = IdentityForm::printed);

/// Series of G^{3,1}_{1,3} values at (u lambda)^2/4 equal to
/// 2 sqrt(pi) / (u^{alpha+1} lambda^2); alpha not an integer.
IdentityReport identity_c(const IdentityCParams& p, const TruncationPolicy& policy = {});

/// Meijer parameters of the `which`-th (0..3) G term of order n in identity_c.
specfun::MeijerG1331Params identity_c_meijer_params(const IdentityCParams& p, std::size_t n, int which);
/// Full (weighted) n-th term of the identity_c sum, before the sin(pi a)/(pi a) prefactor.
double identity_c_term(const IdentityCParams& p, std::size_t n, const TruncationPolicy& policy = {});

/// Series of Whittaker W values at b lambda equal to
/// alpha (lambda/b)^{(alpha+1)/2} e^{-b lambda/2}.
IdentityReport identity_d(const IdentityDParams& p, const TruncationPolicy& policy = {},
                          const specfun::WhittakerOptions& wopts = {});

/// n-th term of the identity_d sum, including the leading lambda.
double identity_d_term(const IdentityDParams& p, std::size_t n, const specfun::WhittakerOptions& wopts = {});

}  // namespace geew
