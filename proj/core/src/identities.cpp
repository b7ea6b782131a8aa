#include "geew/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "geew/error.hpp"

namespace geew {

namespace sd = specfun::detail;

namespace {

constexpr double kFloor = 1e-300;

IdentityReport finish(double lhs, double rhs, double tail, std::size_t terms, bool converged, bool asymptotic) {
    IdentityReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::fabs(lhs - rhs);
    r.rel_residual = r.abs_residual / std::max(std::fabs(rhs), kFloor);
    r.lhs_tail_estimate = tail;
    r.terms_used = terms;
    r.converged = converged;
    r.mode = asymptotic ? IdentityMode::asymptotic : IdentityMode::convergent;
    if (asymptotic) {
        r.warning = true;
        r.message = "divergent series optimally truncated at its smallest term";
    }
    return r;
}

void add_message(IdentityReport& r, const std::string& msg) {
    r.warning = true;
    r.message = r.message.empty() ? msg : r.message + "; " + msg;
}

void require_non_integer_alpha(const char* fn, double alpha) {
    if (sd::near_integer(alpha, 1e-9))
        throw DomainError(std::string(fn) + ": alpha must not be an integer (sin(pi alpha) vanishes)");
}

// ---------------------------------------------------------------------------
// identity a
// ---------------------------------------------------------------------------

struct Q11 {
    double a;      // beta / lambda^k
    double log_a;
    double a0;     // a^{-1/(k-1)}
    double k;
    double alpha;
    double inv_gamma_alpha1;
    std::vector<double> binom;  // C(alpha-1, n), grown on demand

    double binomial(std::size_t n) {
        if (binom.empty()) binom.push_back(1.0);
        while (binom.size() <= n) {
            const auto j = static_cast<double>(binom.size() - 1);
            binom.push_back(binom.back() * (alpha - 1.0 - j) / (j + 1.0));
        }
        return binom[n];
    }

    double lower(double e, double c) const {
        return std::exp(e * log_a + sd::log_lower_incomplete_gamma(c, a0));
    }
    double upper(double e, double c) const {
        return std::exp(e * log_a + sd::log_upper_incomplete_gamma(c, a0));
    }

    // (-a)^m/m! C(alpha-1,n)/Gamma(alpha+1) {...}; the six blocks of the identity
    double term(std::size_t m, std::size_t n) {
        const double c = binomial(n);
        if (c == 0.0) return 0.0;
        const double mm = static_cast<double>(m);
        const double nn = static_cast<double>(n);
        const double km1n = (k - 1.0) * nn;
        CompensatedSum s;
        s.add(lower(nn, alpha + 1.0 + k * mm + km1n));
        s.add((k + 1.0) * lower(nn + 1.0, alpha + k * (mm + 1.0) + km1n));
        s.add(k * lower(nn + 2.0, alpha + k * (mm + 2.0) - 1.0 + km1n));
        s.add(upper(alpha - nn - 1.0, k * (alpha - 1.0 + mm) + 2.0 - km1n));
        s.add((k + 1.0) * upper(alpha - nn, k * (alpha + mm) + 1.0 - km1n));
        s.add(k * upper(alpha - nn + 1.0, k * (alpha + mm + 1.0) - km1n));
        const double w = ((m % 2 == 0) ? 1.0 : -1.0) * std::exp(mm * log_a - std::lgamma(mm + 1.0));
        return w * c * inv_gamma_alpha1 * s.value();
    }
};

}  // namespace

IdentityReport identity_a(const Theta& theta, const TruncationPolicy& policy, SummationOrder order) {
    theta.validate();
    policy.validate();
    require_non_integer_alpha("identity_a", theta.alpha);
    if (theta.k == 1.0) throw DomainError("identity_a: k = 1 leaves a0 = (beta lambda^-k)^{-1/(k-1)} undefined");
    if (theta.k < 1.0)
        throw DomainError("identity_a: the incomplete-gamma split used by the identity requires k > 1");

    Q11 q;
    q.k = theta.k;
    q.alpha = theta.alpha;
    q.a = theta.beta / std::pow(theta.lambda, theta.k);
    q.log_a = std::log(q.a);
    q.a0 = std::exp(-q.log_a / (theta.k - 1.0));
    q.inv_gamma_alpha1 = specfun::reciprocal_gamma(theta.alpha + 1.0);

    SeriesOptions inner_opts;
    inner_opts.accelerate_alternating = true;
    inner_opts.min_terms = static_cast<std::size_t>(std::max(0.0, std::ceil(theta.alpha - 1.0))) + 1;

    struct Row {
        double value = 0.0;
        std::size_t terms = 0;
        double tail = 0.0;
        bool converged = false;
    };
    std::vector<Row> rows;
    double largest = 0.0;
    auto row_value = [&](std::size_t m) {
        if (m < rows.size()) return rows[m].value;
        const SeriesValue inner = sum_series(
            [&](std::size_t n) {
                const double t = q.term(m, n);
                largest = std::max(largest, std::fabs(t));
                return t;
            },
            policy, inner_opts);
        rows.push_back({inner.value, inner.terms_used, inner.tail_estimate, inner.converged});
        return inner.value;
    };

    SeriesOptions outer_opts;
    outer_opts.detect_divergence = true;
    const SeriesValue outer = sum_series(row_value, policy, outer_opts);

    double lhs = outer.value;
    double tail = outer.tail_estimate;
    std::size_t terms = 0;
    bool converged = outer.converged;
    for (std::size_t m = 0; m < outer.terms_used; ++m) {
        tail += rows[m].tail;
        terms += rows[m].terms;
        converged = converged && rows[m].converged;
    }

    if (order == SummationOrder::diagonal) {
        // Same index set and the same per-row acceleration corrections,
        // accumulated along antidiagonals m + n = d.
        const std::size_t rows_kept = outer.terms_used;
        std::size_t width = 0;
        for (std::size_t m = 0; m < rows_kept; ++m) width = std::max(width, rows[m].terms);
        std::vector<CompensatedSum> raw(rows_kept);
        CompensatedSum diag;
        for (std::size_t d = 0; d < rows_kept + width; ++d) {
            for (std::size_t m = 0; m < rows_kept && m <= d; ++m) {
                const std::size_t n = d - m;
                if (n >= rows[m].terms) continue;
                const double t = q.term(m, n);
                diag.add(t);
                raw[m].add(t);
            }
        }
        for (std::size_t m = 0; m < rows_kept; ++m) diag.add(rows[m].value - raw[m].value());
        lhs = diag.value();
    }

    IdentityReport rep = finish(lhs, 1.0, tail, terms, converged, outer.asymptotic);
    const double lost = std::log10(std::max(largest, kFloor) / std::max(std::fabs(lhs), kFloor));
    if (lost > 6.0) add_message(rep, "cancellation: about " + std::to_string(static_cast<int>(lost)) + " digits lost");
    return rep;
}

// ---------------------------------------------------------------------------
// identity b
// ---------------------------------------------------------------------------

IdentityReport identity_b(const Theta& theta, const TruncationPolicy& policy, IdentityForm form) {
    theta.validate();
    policy.validate();
    if (!(theta.alpha >= 1.0) || !sd::near_integer(theta.alpha, 1e-9))
        throw DomainError("identity_b: requires integer alpha >= 1");
    const auto alpha_n = static_cast<int>(std::lround(theta.alpha));
    const double alpha = alpha_n;
    const double k = theta.k;
    const double lam = theta.lambda;
    const double beta = theta.beta;
    const double a = beta / std::pow(lam, k);

    CompensatedSum sum;
    double tail = 0.0;
    std::size_t terms = 0;
    bool converged = true;
    bool asymptotic = false;
    auto psi = [&](double w, double c, bool starred) {
        const SeriesValue v = specfun::fox_wright_1psi0({c, k, -a, starred}, policy);
        sum.add(w * v.value);
        tail += std::fabs(w) * v.tail_estimate;
        terms += v.terms_used;
        converged = converged && v.converged;
        asymptotic = asymptotic || v.asymptotic;
    };

    if (form == IdentityForm::printed) {
        double coef = 1.0;  // (1-alpha)_n / n! (-a)^n
        const double w2 = specfun::reciprocal_gamma(k) / std::pow(lam, k);
        const double w4 = beta * specfun::reciprocal_gamma(2.0 * k - 1.0) / std::pow(lam, 2.0 * k);
        for (int n = 0; n < alpha_n; ++n) {
            if (n > 0) coef *= (1.0 - alpha + n - 1.0) / n * (-a);
            const double nn = n;
            psi(coef * std::tgamma(alpha + 1.0 + k * nn), alpha + 1.0 + (k - 1.0) * nn, true);
            psi(coef * w2, alpha + k * (1.0 + nn), false);
            int sgn = 0;
            const double poch = std::exp(sd::log_pochhammer(k, alpha + k * nn, sgn));
            psi(coef * sgn * poch * beta / std::pow(lam, k), alpha + k + (k - 1.0) * nn, true);
            psi(coef * w4, alpha + k * (2.0 + nn) - 1.0, false);
        }
    } else {
        // (1/Gamma(alpha)) sum_n C(alpha-1,n) a^n { Psi(alpha+1+(k-1)n)
        //   + a(k+1) Psi(alpha+k+(k-1)n) + a^2 k Psi(alpha+2k-1+(k-1)n) }
        const double g = 1.0 / std::tgamma(alpha);
        for (int n = 0; n < alpha_n; ++n) {
            const double nn = n;
            const double w = g * sd::binomial(alpha - 1.0, static_cast<std::size_t>(n)) * std::pow(a, nn);
            psi(w, alpha + 1.0 + (k - 1.0) * nn, false);
            psi(w * a * (k + 1.0), alpha + k + (k - 1.0) * nn, false);
            psi(w * a * a * k, alpha + 2.0 * k - 1.0 + (k - 1.0) * nn, false);
        }
    }
    return finish(sum.value(), alpha, tail, terms, converged, asymptotic);
}

// ---------------------------------------------------------------------------
// identity c
// ---------------------------------------------------------------------------

specfun::MeijerG1331Params identity_c_meijer_params(const IdentityCParams& p, std::size_t n, int which) {
    const double al = p.alpha;
    const double n3 = 3.0 * static_cast<double>(n);
    const double z = (p.u * p.lambda) * (p.u * p.lambda) / 4.0;
    switch (which) {
        case 0: return {(1.0 - al - n3) / 2.0, (1.0 + al - n3) / 2.0, 0.0, 0.5, z};
        case 1: return {-(1.0 + al + n3) / 2.0, (al - 1.0 - n3) / 2.0, 0.0, 0.5, z};
        case 2: return {-(al + 1.0 + n3) / 2.0, (al - 1.0 - n3) / 2.0, 0.0, 0.5, z};
        case 3: return {-(al + 3.0 + n3) / 2.0, (al - 3.0 - n3) / 2.0, 0.0, 0.5, z};
        default: throw DomainError("identity_c_meijer_params: which must be 0..3");
    }
}

namespace {

struct CTerm {
    double value = 0.0;
    double tail = 0.0;
    std::size_t terms = 0;
    bool converged = true;
};

CTerm c_term(const IdentityCParams& p, std::size_t n, const TruncationPolicy& policy) {
    const double l = p.lambda;
    const double weights[4] = {1.0, 3.0 / (l * l * l), 1.0 / l, 3.0 / (l * l * l * l)};
    const double nn = static_cast<double>(n);
    const double outer = ((n % 2 == 0) ? 1.0 : -1.0) *
                         std::exp(nn * std::log(p.u / (l * l)) - std::lgamma(nn + 1.0));
    CTerm out;
    CompensatedSum s;
    for (int which = 0; which < 4; ++which) {
        const SeriesValue g = specfun::meijer_g_1331(identity_c_meijer_params(p, n, which), policy);
        s.add(weights[which] * g.value);
        out.tail += std::fabs(outer * weights[which]) * g.tail_estimate;
        out.terms += g.terms_used;
        out.converged = out.converged && g.converged;
    }
    out.value = outer * s.value();
    return out;
}

}  // namespace

double identity_c_term(const IdentityCParams& p, std::size_t n, const TruncationPolicy& policy) {
    return c_term(p, n, policy).value;
}

IdentityReport identity_c(const IdentityCParams& p, const TruncationPolicy& policy) {
    policy.validate();
    if (!(p.lambda > 0.0) || !(p.u > 0.0) || !(p.alpha > 0.0))
        throw DomainError("identity_c: requires lambda, u, alpha > 0");
    require_non_integer_alpha("identity_c", p.alpha);

    std::vector<CTerm> cache;
    auto term = [&](std::size_t n) {
        while (cache.size() <= n) cache.push_back(c_term(p, cache.size(), policy));
        return cache[n].value;
    };
    SeriesOptions opts;
    opts.detect_divergence = true;
    const SeriesValue s = sum_series(term, policy, opts);

    const double pref = std::sin(std::numbers::pi * p.alpha) / (std::numbers::pi * p.alpha);
    double tail = s.tail_estimate;
    std::size_t terms = 0;
    bool converged = s.converged;
    for (std::size_t n = 0; n < s.terms_used; ++n) {
        tail += cache[n].tail;
        terms += cache[n].terms;
        converged = converged && cache[n].converged;
    }
    const double rhs = 2.0 * std::sqrt(std::numbers::pi) / (std::pow(p.u, p.alpha + 1.0) * p.lambda * p.lambda);
    return finish(pref * s.value, rhs, std::fabs(pref) * tail, terms, converged, s.asymptotic);
}

// ---------------------------------------------------------------------------
// identity d
// ---------------------------------------------------------------------------

double identity_d_term(const IdentityDParams& p, std::size_t n, const specfun::WhittakerOptions& wopts) {
    const double al = p.alpha;
    const double l = p.lambda;
    const double z = p.b * l;
    const double nn = static_cast<double>(n);
    const double w1 = specfun::whittaker_w({(al - 1.0) / 2.0 - nn, 1.5 * al + nn, z}, wopts);
    const double w2 = specfun::whittaker_w({al / 2.0 - 1.0 - nn, (3.0 * al + 1.0) / 2.0 + nn, z}, wopts);
    const double w3 = specfun::whittaker_w({(al - 3.0) / 2.0 - nn, 1.5 * al + 1.0 + nn, z}, wopts);
    const double d1 = al + 1.0 + 2.0 * nn;
    const double d2 = al + 2.0 + 2.0 * nn;
    const double bracket = w1 + 3.0 * w2 / (l * l * std::sqrt(z) * d1) + 2.0 * w3 / (std::pow(l, 5.0) * p.b * d1 * d2);
    const double weight = std::exp(nn * std::log(z) - std::lgamma(nn + 1.0) - std::lgamma(d1));
    return l * weight * bracket;
}

IdentityReport identity_d(const IdentityDParams& p, const TruncationPolicy& policy,
                          const specfun::WhittakerOptions& wopts) {
    policy.validate();
    if (!(p.lambda > 0.0) || !(p.b > 0.0) || !(p.alpha > 0.0))
        throw DomainError("identity_d: requires lambda, b, alpha > 0");
    const SeriesValue s = sum_series([&](std::size_t n) { return identity_d_term(p, n, wopts); }, policy);
    const double rhs = p.alpha * std::pow(p.lambda / p.b, (p.alpha + 1.0) / 2.0) * std::exp(-0.5 * p.b * p.lambda);
    IdentityReport rep = finish(s.value, rhs, s.tail_estimate, s.terms_used, s.converged, false);
    if (wopts.perturbation) add_message(rep, "Whittaker perturbation mode: accuracy O(eps_b)");
    return rep;
}

}  // namespace geew
