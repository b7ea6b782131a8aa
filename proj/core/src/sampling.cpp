#include <cmath>

#include "geew/distribution.hpp"
#include "geew/error.hpp"

namespace geew {

double Generator::uniform() {
    // 53 random bits centred in their cell: never 0, never 1
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Generator::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

// Marsaglia-Tsang squeeze; alpha < 1 via Gamma(alpha+1) * U^{1/alpha}.
double Generator::gamma(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("Generator::gamma: requires alpha > 0");
    if (alpha < 1.0) {
        const double g = gamma(alpha + 1.0);
        return g * std::exp(std::log(uniform()) / alpha);
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::vector<double> geew_sample(const Theta& theta, std::size_t n, Generator& gen) {
    theta.validate();
    if (n == 0) throw DomainError("geew_sample: requires n >= 1");
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(theta.h_inverse(gen.gamma(theta.alpha)));
    return out;
}

std::vector<double> geew_sample(const Theta& theta, std::size_t n, std::uint64_t seed) {
    Generator gen(seed);
    return geew_sample(theta, n, gen);
}

}  // namespace geew
