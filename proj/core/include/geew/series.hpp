#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace geew {

/// Stopping rule shared by every infinite series in the library.
struct TruncationPolicy {
    double rel_tol = 1e-12;
    int consec_small = 3;
    int max_terms = 10'000;
    /// Permit optimal truncation of formally divergent series
    /// (Fox-Wright with A > 1 and everything built on it).
    bool allow_asymptotic = false;

    /// Throws DomainError unless rel_tol > 0, consec_small >= 1 and
    /// max_terms >= consec_small.
    void validate() const;
};

struct SeriesValue {
    double value = 0.0;
    /// Magnitude of the last retained term block (or the change of the
    /// accelerated estimate when acceleration was used).
    double tail_estimate = 0.0;
    std::size_t terms_used = 0;
    bool converged = false;
    /// Set when the series was optimally truncated at its smallest term.
    bool asymptotic = false;
};

/// Double-double accumulator (Knuth two-sum on a running hi/lo pair).
class CompensatedSum {
public:
    void add(double x) noexcept;
    CompensatedSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }
    [[nodiscard]] double value() const noexcept { return hi_ + lo_; }
    [[nodiscard]] double hi() const noexcept { return hi_; }
    [[nodiscard]] double lo() const noexcept { return lo_; }

private:
    double hi_ = 0.0;
    double lo_ = 0.0;
};

struct SeriesOptions {
    /// Number of leading terms that must be summed before any stopping rule
    /// is consulted (e.g. until Pochhammer denominators change sign).
    std::size_t min_terms = 0;
    /// Apply repeated averaging of partial sums once the terms alternate in
    /// sign. Used for boundary-convergent binomial-type series.
    bool accelerate_alternating = false;
    /// Averaging depth of the accelerator.
    int acceleration_depth = 12;
    /// Stop at the smallest term once magnitudes start to grow again.
    bool detect_divergence = false;
    /// Magnitude below which |value| is treated as zero for the relative test.
    double abs_floor = 1e-300;
};

/// Sums term(0), term(1), ... under `policy`. The term callback must be
/// pure in n. Divergence detection is honoured only when
/// `opts.detect_divergence` is set; the caller decides whether that is legal.
SeriesValue sum_series(const std::function<double(std::size_t)>& term,
                       const TruncationPolicy& policy,
                       const SeriesOptions& opts = {});

/// Euler-van Wijngaarden estimate from consecutive partial sums: repeatedly
/// replaces the sequence by the means of neighbours and returns the last.
double averaged_limit(const std::vector<double>& partial_sums);

}  // namespace geew
