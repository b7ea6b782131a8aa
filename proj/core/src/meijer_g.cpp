#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "geew/specfun.hpp"

namespace geew::specfun {

namespace {

// Residue of Gamma(b_j - s) at s = b_j + l contributes
// (-1)^l / l! * prod_{i != j} Gamma(b_i - b_j - l) * Gamma(1 - a1 + b_j + l) * z^{b_j + l}.
double residue_term(const std::array<double, 3>& b, double a1, double log_z, std::size_t j, std::size_t l) {
    const double ll = static_cast<double>(l);
    int sign = (l % 2 == 0) ? 1 : -1;
    double lm = -std::lgamma(ll + 1.0) + (b[j] + ll) * log_z;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == j) continue;
        int s = 0;
        lm += log_gamma(b[i] - b[j] - ll, s);
        sign *= s;
    }
    int s = 0;
    const double lg = log_gamma(1.0 - a1 + b[j] + ll, s);
    if (s == 0) return 0.0;  // vanishing 1/Gamma is impossible here; a pole means a1 - b_j in N
    lm += lg;
    sign *= s;
    return sign * std::exp(lm);
}

}  // namespace

SeriesValue meijer_g_1331(const MeijerG1331Params& p, const TruncationPolicy& policy, const MeijerGOptions& opts) {
    if (!(p.z > 0.0)) throw DomainError("meijer_g_1331: requires z > 0");
    const std::array<double, 3> b{p.b1, p.b2, p.b3};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (detail::near_integer(b[i] - b[j], opts.pole_tol))
                throw PoleCoincidenceError("meijer_g_1331: b" + std::to_string(i + 1) + " - b" +
                                           std::to_string(j + 1) +
                                           " is an integer (logarithmic case not supported)");
        }
        const double d = p.a1 - b[i];
        if (d > 0.5 && detail::near_integer(d, opts.pole_tol))
            throw PoleCoincidenceError("meijer_g_1331: a1 - b" + std::to_string(i + 1) +
                                       " is a positive integer; no separating contour exists");
    }
    const double log_z = std::log(p.z);
    SeriesOptions sopts;
    // Gamma(1 - a1 + b_j + l) only starts to dominate once its argument is positive.
    double lead = 0.0;
    for (double bj : b) lead = std::max(lead, p.a1 - 1.0 - bj);
    sopts.min_terms = static_cast<std::size_t>(std::ceil(lead + p.z)) + 2;
    return sum_series(
        [&](std::size_t l) {
            double t = 0.0;
            for (std::size_t j = 0; j < 3; ++j) t += residue_term(b, p.a1, log_z, j, l);
            return t;
        },
        policy, sopts);
}

}  // namespace geew::specfun
