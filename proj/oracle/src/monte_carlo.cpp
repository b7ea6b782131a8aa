#include "geew/oracle/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>

#include "geew/distribution.hpp"

namespace geew::oracle {

McEstimate mc_moment(const Theta& theta, double r, std::size_t n, std::uint64_t seed) {
    if (n < 1000) throw std::domain_error("mc_moment: requires n >= 1000");
    const auto xs = geew_sample(theta, n, seed);
    // Welford
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t i = 0;
    for (double x : xs) {
        ++i;
        const double v = std::pow(x, r);
        const double d = v - mean;
        mean += d / static_cast<double>(i);
        m2 += d * (v - mean);
    }
    const double var = m2 / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace geew::oracle
