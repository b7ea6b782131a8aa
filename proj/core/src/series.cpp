#include "geew/series.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "geew/error.hpp"

namespace geew {

void TruncationPolicy::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("TruncationPolicy: rel_tol must be > 0");
    if (consec_small < 1) throw DomainError("TruncationPolicy: consec_small must be >= 1");
    if (max_terms < consec_small)
        throw DomainError("TruncationPolicy: max_terms must be >= consec_small");
}

void CompensatedSum::add(double x) noexcept {
    // two-sum of hi and x, error folded into lo
    const double s = hi_ + x;
    const double bp = s - hi_;
    const double err = (hi_ - (s - bp)) + (x - bp);
    hi_ = s;
    lo_ += err;
    // renormalise so hi carries the leading part
    const double t = hi_ + lo_;
    lo_ = lo_ - (t - hi_);
    hi_ = t;
}

double averaged_limit(const std::vector<double>& partial_sums) {
    if (partial_sums.empty()) return 0.0;
    std::vector<double> s = partial_sums;
    while (s.size() > 1) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
        s.pop_back();
    }
    return s.front();
}

SeriesValue sum_series(const std::function<double(std::size_t)>& term,
                       const TruncationPolicy& policy, const SeriesOptions& opts) {
    policy.validate();
    const auto max_terms = static_cast<std::size_t>(policy.max_terms);
    const auto depth = static_cast<std::size_t>(std::max(1, opts.acceleration_depth));

    CompensatedSum sum;
    std::deque<double> recent_sums;   // last depth+1 partial sums
    std::deque<double> recent_terms;  // last depth+2 terms, for the sign test
    std::deque<double> window;        // magnitudes of the current small-run

    // history for optimal truncation
    std::vector<double> history_sums;
    std::vector<double> history_abs;
    if (opts.detect_divergence) {
        history_sums.reserve(256);
        history_abs.reserve(256);
    }

    SeriesValue out;
    int small_run = 0;
    int acc_small_run = 0;
    int growth_run = 0;
    double prev_abs = -1.0;
    double prev_acc = std::numeric_limits<double>::quiet_NaN();
    double acc_tail = 0.0;
    double last_acc_diff = std::numeric_limits<double>::infinity();

    for (std::size_t n = 0; n < max_terms; ++n) {
        const double t = term(n);
        if (!std::isfinite(t))
            throw OverflowError("series term " + std::to_string(n) + " is not finite");
        sum.add(t);
        const double s = sum.value();
        const double at = std::fabs(t);
        out.terms_used = n + 1;

        if (opts.detect_divergence) {
            history_sums.push_back(s);
            history_abs.push_back(at);
            if (prev_abs >= 0.0 && at > prev_abs && n >= opts.min_terms) {
                ++growth_run;
            } else {
                growth_run = 0;
            }
            if (growth_run >= policy.consec_small) {
                // optimal truncation: keep everything through the smallest term
                const auto it = std::min_element(history_abs.begin(), history_abs.end());
                const auto idx = static_cast<std::size_t>(it - history_abs.begin());
                out.value = history_sums[idx];
                out.tail_estimate = *it;
                out.terms_used = idx + 1;
                out.asymptotic = true;
                out.converged =
                    out.tail_estimate <= policy.rel_tol * std::max(std::fabs(out.value), opts.abs_floor);
                return out;
            }
        }
        prev_abs = at;

        // plain relative-size rule
        const double scale = std::max(std::fabs(s), opts.abs_floor);
        if (at <= policy.rel_tol * scale) {
            ++small_run;
            window.push_back(at);
        } else {
            small_run = 0;
            window.clear();
        }
        if (small_run >= policy.consec_small && n + 1 >= opts.min_terms) {
            out.value = s;
            out.tail_estimate = *std::max_element(window.begin(), window.end());
            out.converged = true;
            return out;
        }

        if (opts.accelerate_alternating) {
            recent_sums.push_back(s);
            recent_terms.push_back(t);
            if (recent_sums.size() > depth + 1) recent_sums.pop_front();
            if (recent_terms.size() > depth + 2) recent_terms.pop_front();
            bool alternating = recent_terms.size() == depth + 2;
            for (std::size_t i = 0; alternating && i + 1 < recent_terms.size(); ++i)
                alternating = recent_terms[i] * recent_terms[i + 1] < 0.0;
            if (alternating) {
                const double acc = averaged_limit({recent_sums.begin(), recent_sums.end()});
                if (std::isfinite(prev_acc)) {
                    const double diff = std::fabs(acc - prev_acc);
                    last_acc_diff = diff;
                    if (diff <= policy.rel_tol * std::max(std::fabs(acc), opts.abs_floor)) {
                        ++acc_small_run;
                        acc_tail = std::max(acc_tail, diff);
                    } else {
                        acc_small_run = 0;
                        acc_tail = 0.0;
                    }
                    if (acc_small_run >= policy.consec_small && n + 1 >= opts.min_terms) {
                        out.value = acc;
                        out.tail_estimate = acc_tail;
                        out.converged = true;
                        return out;
                    }
                }
                prev_acc = acc;
            } else {
                prev_acc = std::numeric_limits<double>::quiet_NaN();
                acc_small_run = 0;
                acc_tail = 0.0;
            }
        }
    }

    // ran out of terms
    out.converged = false;
    if (opts.accelerate_alternating && std::isfinite(prev_acc)) {
        out.value = prev_acc;
        out.tail_estimate = last_acc_diff;
    } else {
        out.value = sum.value();
        out.tail_estimate = prev_abs;
    }
    return out;
}

}  // namespace geew
