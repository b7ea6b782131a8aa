#pragma once

#include <cstddef>
#include <functional>

namespace geew::oracle {

struct SignedLogTerm {
    int sign = 1;
    double log_magnitude = 0.0;
};

/// Sums exactly n_terms terms sign * exp(log_magnitude) in extended precision
/// (long double with compensation). Throws std::overflow_error for a term
/// outside the double range.
double brute_force_series(const std::function<SignedLogTerm(std::size_t)>& term, std::size_t n_terms);

/// Reference 1Psi0*(a, A; z) = sum (a)_{An} z^n / n! over exactly n_terms terms.
double brute_force_fox_wright(double a, double A, double z, std::size_t n_terms);

}  // namespace geew::oracle
