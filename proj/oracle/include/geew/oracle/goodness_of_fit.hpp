#pragma once

#include <functional>
#include <vector>

namespace geew::oracle {

/// Kolmogorov-Smirnov statistic sup |F_n - F| of a sample against cdf.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Asymptotic critical value c(level)/sqrt(n); level 0.99 gives 1.628/sqrt(n).
double ks_critical_value(std::size_t n, double level = 0.99);

}  // namespace geew::oracle
