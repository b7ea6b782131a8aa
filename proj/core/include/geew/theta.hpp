#pragma once

#include <functional>

namespace geew {

/// GEEW parameters; every component strictly positive.
struct Theta {
    double lambda = 1.0;
    double beta = 1.0;
    double k = 1.0;
    double alpha = 1.0;

    /// Throws DomainError unless all four are finite and > 0.
    void validate() const;

    /// h(x) = lambda x + beta x^k for x >= 0.
    [[nodiscard]] double h(double x) const;
    /// h'(x) = lambda + beta k x^{k-1}; +inf at x = 0 when k < 1.
    [[nodiscard]] double h_prime(double x) const;
    /// x >= 0 with h(x) = y (h is strictly increasing).
    [[nodiscard]] double h_inverse(double y) const;
};

/// A nondecreasing baseline h: R+ -> R+ with derivative, defining GE(alpha, h).
struct HSpec {
    std::function<double(double)> h;
    std::function<double(double)> h_prime;

    static HSpec geew(const Theta& theta);
};

/// inf{t >= 0 : h(t) >= y} by bracketing and bisection.
double generalized_inverse(const HSpec& spec, double y);

}  // namespace geew
