#pragma once

#include <cstddef>
#include <cstdint>

#include "geew/theta.hpp"

namespace geew::oracle {

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Sample mean of X^r over n draws of GEEW(theta) and its standard error.
McEstimate mc_moment(const Theta& theta, double r, std::size_t n, std::uint64_t seed);

}  // namespace geew::oracle
