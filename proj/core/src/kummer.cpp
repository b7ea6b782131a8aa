#include <algorithm>
#include <cmath>

#include "geew/specfun.hpp"

namespace geew::specfun {

namespace {

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

SeriesValue direct_series(double a, double b, double z, const TruncationPolicy& policy) {
    // t_{n+1} = t_n (a+n)/(b+n) z/(n+1); the callback is pure in n but walks
    // forward from a cached state in the common sequential case.
    struct Cursor {
        std::size_t n = 0;
        double t = 1.0;
    } cur;
    auto term = [&](std::size_t n) {
        if (n < cur.n) cur = Cursor{};
        while (cur.n < n) {
            const double k = static_cast<double>(cur.n);
            cur.t *= (a + k) / (b + k) * z / (k + 1.0);
            ++cur.n;
        }
        return cur.t;
    };
    SeriesOptions opts;
    // Denominators (b)_n and numerators (a)_n may change sign before the tail
    // starts shrinking; the terms also grow until n ~ |z|.
    const double lead = std::max({-a, -b, std::fabs(z), 0.0});
    opts.min_terms = static_cast<std::size_t>(std::ceil(lead)) + 2;
    return sum_series(term, policy, opts);
}

}  // namespace

SeriesValue kummer_1f1(double a, double b, double z, const TruncationPolicy& policy) {
    if (nonpositive_integer(b)) throw DomainError("kummer_1f1: b must not be a non-positive integer");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z))
        throw DomainError("kummer_1f1: non-finite argument");
    if (z == 0.0 || a == 0.0) {
        SeriesValue out;
        out.value = 1.0;
        out.terms_used = 1;
        out.converged = true;
        return out;
    }
    // Kummer's transformation turns an alternating sum into a positive one.
    // A terminating series (a a non-positive integer) is summed as is.
    if (z < -5.0 && !nonpositive_integer(a)) {
        SeriesValue s = direct_series(b - a, b, -z, policy);
        const double scale = std::exp(z);
        s.value *= scale;
        s.tail_estimate *= scale;
        return s;
    }
    return direct_series(a, b, z, policy);
}

}  // namespace geew::specfun
