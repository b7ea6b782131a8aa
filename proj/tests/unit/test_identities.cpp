#include <cmath>
#include <numbers>

#include "doctest.h"
#include "geew/distribution.hpp"
#include "geew/identities.hpp"
#include "reference.hpp"

using namespace geew;
using geew::test::ref_moment_route;
using geew::test::rel_diff;

namespace {

Theta c_theta(const IdentityCParams& p) { return {p.lambda, 1.0 / ((p.u * p.lambda) * (p.u * p.lambda)), 3.0, p.alpha}; }
Theta d_theta(const IdentityDParams& p) { return {p.lambda, 1.0 / (p.b * p.lambda), 2.0, p.alpha}; }

// the identities are normalised forms of lambda E X + beta E X^k = alpha
double route_target(const Theta& t, double rhs) { return rhs * ref_moment_route(t) / t.alpha; }

void check_report_shape(const IdentityReport& r) {
    CHECK(r.abs_residual == std::fabs(r.lhs - r.rhs));
    CHECK(r.rel_residual == r.abs_residual / std::max(std::fabs(r.rhs), 1e-300));
    if (r.mode == IdentityMode::asymptotic) CHECK(r.warning);
}

bool same(const IdentityReport& a, const IdentityReport& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs && a.abs_residual == b.abs_residual &&
           a.rel_residual == b.rel_residual && a.lhs_tail_estimate == b.lhs_tail_estimate &&
           a.terms_used == b.terms_used && a.mode == b.mode && a.converged == b.converged &&
           a.warning == b.warning && a.message == b.message;
}

TruncationPolicy with_tol(double tol) {
    TruncationPolicy p;
    p.rel_tol = tol;
    return p;
}

const Theta kSetsA[] = {{1, 0.25, 2, 0.5}, {1, 0.05, 1.5, 0.5}, {2, 0.2, 1.3, 1.7}};
const Theta kSetsB[] = {{1, 0.5, 0.8, 2}, {1.5, 0.3, 1.0, 3}};
const IdentityCParams kSetsC[] = {{1, 1, 0.5}, {2, 0.5, 0.3}};
const IdentityDParams kSetsD[] = {{1, 1, 0.4}, {0.5, 2, 1.2}};

}  // namespace

TEST_SUITE("identity_a") {

TEST_CASE("equals one at (1, 0.25, 2, 0.5)") {
    const auto r = identity_a({1, 0.25, 2, 0.5});
    CHECK(r.rhs == 1.0);
    check_report_shape(r);
    CHECK(r.rel_residual < 1e-6);
}

TEST_CASE("equals one for small beta / lambda^k") {
    for (const auto& t : {Theta{1, 0.05, 1.5, 0.5}, Theta{2, 0.2, 1.3, 1.7}}) {
        const auto r = identity_a(t);
        check_report_shape(r);
        CHECK(r.rel_residual < 1e-6);
    }
}

TEST_CASE("LHS equals (lambda E X + beta E X^k) / alpha from the moment series") {
    for (const auto& t : kSetsA) {
        const double route = t.lambda * raw_moment_series(t, 1.0).value + t.beta * raw_moment_series(t, t.k).value;
        CHECK(rel_diff(identity_a(t).lhs, route / t.alpha) < 1e-9);
    }
}

TEST_CASE("integer proximity guard") {
    CHECK_NOTHROW(identity_a({2, 0.1, 1.5, 1.5 + 1e-10}));
    CHECK_THROWS_AS(identity_a({1, 0.1, 1.5, 2.0}), DomainError);
    CHECK_THROWS_AS(identity_a({1, 0.1, 1.5, 2.0 + 1e-11}), DomainError);
    CHECK_THROWS_AS(identity_a({1, 0.1, 1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(identity_a({1, 0.1, 0.8, 0.5}), DomainError);
}

TEST_CASE("k > 1 is reported as asymptotic with a warning") {
    const auto r = identity_a({1, 0.25, 2, 0.5});
    CHECK(r.mode == IdentityMode::asymptotic);
    CHECK(r.warning);
    CHECK_FALSE(r.message.empty());
}

}  // TEST_SUITE

TEST_SUITE("identity_b") {

TEST_CASE("equals alpha at (1, 0.5, 0.8, 2)") {
    const auto r = identity_b({1, 0.5, 0.8, 2});
    CHECK(r.rhs == 2.0);
    check_report_shape(r);
    CHECK(r.rel_residual < 1e-6);
}

TEST_CASE("equals alpha at (1.5, 0.3, 1.0, 3) inside the unit disc") {
    const Theta t{1.5, 0.3, 1.0, 3};
    REQUIRE(t.beta / std::pow(t.lambda, t.k) < 1.0);
    const auto r = identity_b(t);
    CHECK(r.rhs == 3.0);
    CHECK(r.rel_residual < 1e-6);
}

TEST_CASE("alpha = 1 single term against the quadrature route") {
    const Theta t{1, 0.5, 0.8, 1};
    const auto r = identity_b(t);
    CHECK(rel_diff(r.lhs, ref_moment_route(t)) < 1e-8);
}

TEST_CASE("corrected layout equals alpha") {
    for (const auto& t : {Theta{1, 0.5, 0.8, 2}, Theta{1.5, 0.3, 1.0, 3}, Theta{1, 0.5, 0.8, 1}, Theta{0.7, 0.2, 0.5, 4}}) {
        CAPTURE(t.alpha);
        const auto r = identity_b(t, {}, IdentityForm::corrected);
        CHECK(r.converged);
        CHECK(r.rel_residual < 1e-10);
    }
}

TEST_CASE("k > 1 needs asymptotic mode") {
    const Theta t{1, 0.3, 2, 2};
    try {
        identity_b(t);
        FAIL("expected DivergenceError");
    } catch (const DivergenceError& e) {
        CHECK(std::string(e.what()).find("1 - A > 0") != std::string::npos);
    }
    TruncationPolicy p;
    p.allow_asymptotic = true;
    const auto r = identity_b(t, p);
    CHECK(r.mode == IdentityMode::asymptotic);
    CHECK(r.warning);
}

TEST_CASE("non-integer alpha is rejected") {
    CHECK_THROWS_AS(identity_b({1, 0.5, 0.8, 2.5}), DomainError);
    CHECK_THROWS_AS(identity_b({1, 0.5, 0.8, 0.5}), DomainError);
}

}  // TEST_SUITE

TEST_SUITE("identity_c") {

TEST_CASE("equals 2 sqrt(pi) at (1, 1, 0.5)") {
    const auto r = identity_c({1, 1, 0.5});
    CHECK(rel_diff(r.rhs, 2.0 * std::sqrt(std::numbers::pi)) < 1e-15);
    check_report_shape(r);
    CHECK(r.rel_residual < 1e-5);
}

TEST_CASE("LHS equals the quadrature route at (1, 1, 0.5)") {
    const IdentityCParams p{1, 1, 0.5};
    const auto r = identity_c(p);
    CHECK(rel_diff(r.lhs, route_target(c_theta(p), r.rhs)) < 1e-5);
}

TEST_CASE("equals the closed form at (2, 0.5, 0.3)") {
    const auto r = identity_c({2, 0.5, 0.3});
    CHECK(r.rel_residual < 1e-5);
}

TEST_CASE("n = 0 term is assembled from the same Meijer values") {
    const IdentityCParams p{1, 1, 0.5};
    const double w[4] = {1.0, 3.0, 1.0, 3.0};
    CompensatedSum s;
    for (int which = 0; which < 4; ++which)
        s.add(w[which] * specfun::meijer_g_1331(identity_c_meijer_params(p, 0, which)).value);
    CHECK(identity_c_term(p, 0) == s.value());
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(identity_c({1, 1, 2.0}), DomainError);
    CHECK_THROWS_AS(identity_c({0, 1, 0.5}), DomainError);
    CHECK_THROWS_AS(identity_c_meijer_params({1, 1, 0.5}, 0, 4), DomainError);
}

}  // TEST_SUITE

TEST_SUITE("identity_d") {

TEST_CASE("equals the closed form at (1, 1, 0.4)") {
    const auto r = identity_d({1, 1, 0.4});
    CHECK(rel_diff(r.rhs, 0.4 * std::exp(-0.5)) < 1e-15);
    check_report_shape(r);
    CHECK(r.rel_residual < 1e-5);
}

TEST_CASE("LHS equals the quadrature route at (1, 1, 0.4)") {
    const IdentityDParams p{1, 1, 0.4};
    const auto r = identity_d(p);
    CHECK(rel_diff(r.lhs, route_target(d_theta(p), r.rhs)) < 1e-5);
}

TEST_CASE("equals the closed form at (0.5, 2, 1.2)") { CHECK(identity_d({0.5, 2, 1.2}).rel_residual < 1e-5); }

TEST_CASE("factorial decay of the terms") {
    const IdentityDParams p{1, 1, 0.4};
    CHECK(std::fabs(identity_d_term(p, 5) / identity_d_term(p, 0)) < 1e-4);
}

TEST_CASE("index guard") {
    // second index 3 alpha / 2 + n is a half-integer for alpha = 1/3
    CHECK_THROWS_AS(identity_d({1, 1, 1.0 / 3.0}), NearDegenerateIndexError);
    specfun::WhittakerOptions o;
    o.perturbation = true;
    CHECK_NOTHROW(identity_d({1, 1, 1.0 / 3.0}, {}, o));
}

}  // TEST_SUITE

TEST_SUITE("identity_properties") {

TEST_CASE("row-major and diagonal orders agree") {
    for (const auto& t : kSetsA) {
        const double a = identity_a(t, {}, SummationOrder::row_major).lhs;
        const double b = identity_a(t, {}, SummationOrder::diagonal).lhs;
        CHECK(rel_diff(a, b) < 1e-9);
    }
}

TEST_CASE("residual does not grow as the tolerance tightens") {
    const double tols[] = {1e-6, 1e-10, 1e-12};
    auto check_chain = [&](const auto& eval) {
        double prev = std::numeric_limits<double>::infinity();
        for (double tol : tols) {
            const double r = eval(with_tol(tol)).rel_residual;
            CHECK(r <= prev + 1e-13);
            prev = r;
        }
    };
    for (const auto& t : kSetsA) check_chain([&](const TruncationPolicy& p) { return identity_a(t, p); });
    for (const auto& t : kSetsB) check_chain([&](const TruncationPolicy& p) { return identity_b(t, p); });
    for (const auto& c : kSetsC) check_chain([&](const TruncationPolicy& p) { return identity_c(c, p); });
    for (const auto& d : kSetsD) check_chain([&](const TruncationPolicy& p) { return identity_d(d, p); });
}

TEST_CASE("reports are pure") {
    CHECK(same(identity_a(kSetsA[1]), identity_a(kSetsA[1])));
    CHECK(same(identity_b(kSetsB[0]), identity_b(kSetsB[0])));
    CHECK(same(identity_c(kSetsC[0]), identity_c(kSetsC[0])));
    CHECK(same(identity_d(kSetsD[0]), identity_d(kSetsD[0])));
}

TEST_CASE("LHS equals the quadrature route on every set") {
    for (const auto& t : kSetsA) {
        const auto r = identity_a(t);
        CAPTURE(t.beta);
        CHECK(rel_diff(r.lhs, route_target(t, r.rhs)) < 1e-5);
    }
    for (const auto& t : kSetsB) {
        const auto r = identity_b(t);
        CAPTURE(t.alpha);
        CHECK(rel_diff(r.lhs, route_target(t, r.rhs)) < 1e-5);
    }
    for (const auto& c : kSetsC) {
        const auto r = identity_c(c);
        CAPTURE(c.alpha);
        CHECK(rel_diff(r.lhs, route_target(c_theta(c), r.rhs)) < 1e-5);
    }
    for (const auto& d : kSetsD) {
        const auto r = identity_d(d);
        CAPTURE(d.alpha);
        CHECK(rel_diff(r.lhs, route_target(d_theta(d), r.rhs)) < 1e-5);
    }
}

}  // TEST_SUITE
