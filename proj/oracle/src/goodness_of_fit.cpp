#include "geew/oracle/goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geew::oracle {

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::domain_error("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

double ks_critical_value(std::size_t n, double level) {
    if (!(level > 0.0 && level < 1.0)) throw std::domain_error("ks_critical_value: level in (0,1)");
    // Kolmogorov limit law: P(sqrt(n) D > c) ~ 2 exp(-2 c^2)
    const double c = std::sqrt(-0.5 * std::log(0.5 * (1.0 - level)));
    return c / std::sqrt(static_cast<double>(n));
}

}  // namespace geew::oracle
