#include "geew/oracle/brute_force.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

namespace geew::oracle {

double brute_force_series(const std::function<SignedLogTerm(std::size_t)>& term, std::size_t n_terms) {
    if (n_terms == 0) throw std::domain_error("brute_force_series: requires n_terms >= 1");
    const long double max_log = std::log(static_cast<long double>(DBL_MAX));
    // Neumaier summation in long double
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (std::size_t n = 0; n < n_terms; ++n) {
        const SignedLogTerm t = term(n);
        if (t.sign == 0) continue;
        if (t.log_magnitude > max_log || std::isnan(t.log_magnitude))
            throw std::overflow_error("brute_force_series: term " + std::to_string(n) + " out of range");
        const long double v = (t.sign > 0 ? 1.0L : -1.0L) * std::exp(static_cast<long double>(t.log_magnitude));
        const long double s = sum + v;
        if (std::fabs(sum) >= std::fabs(v)) {
            comp += (sum - s) + v;
        } else {
            comp += (v - s) + sum;
        }
        sum = s;
    }
    return static_cast<double>(sum + comp);
}

double brute_force_fox_wright(double a, double A, double z, std::size_t n_terms) {
    const long double la = std::lgamma(static_cast<long double>(a));
    const long double lz = std::log(std::fabs(static_cast<long double>(z)));
    return brute_force_series(
        [&](std::size_t n) -> SignedLogTerm {
            if (n == 0) return {1, 0.0};
            if (z == 0.0) return {0, 0.0};
            const long double nn = static_cast<long double>(n);
            const long double lm = std::lgamma(a + A * nn) - la + nn * lz - std::lgamma(nn + 1.0L);
            const int sign = (z < 0.0 && n % 2 == 1) ? -1 : 1;
            return {sign, static_cast<double>(lm)};
        },
        n_terms);
}

}  // namespace geew::oracle
