#include "geew/oracle/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace geew::oracle {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7]
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = kWgk[7] * fc;
    double g = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double s = f(c - dx) + f(c + dx);
        k += kWgk[i] * s;
        if (i % 2 == 1) g += kWg[i / 2] * s;
    }
    k *= h;
    g *= h;
    if (!std::isfinite(k)) throw std::domain_error("quadrature: integrand is not finite on the interval");
    return {a, b, k, std::fabs(k - g)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts) {
    if (!(b > a)) throw std::domain_error("integrate: requires b > a");
    const std::size_t pieces = opts.initial_pieces == 0 ? 1 : opts.initial_pieces;
    std::priority_queue<Piece> heap;
    const double w = (b - a) / static_cast<double>(pieces);
    for (std::size_t i = 0; i < pieces; ++i) {
        const double lo = a + w * static_cast<double>(i);
        const double hi = (i + 1 == pieces) ? b : lo + w;
        heap.push(gk15(f, lo, hi));
    }
    QuadratureResult res;
    res.subdivisions = pieces;
    auto totals = [&](double& value, double& error) {
        // deterministic reduction over a copy of the heap
        auto copy = heap;
        std::vector<Piece> all;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        value = 0.0;
        error = 0.0;
        for (auto it = all.rbegin(); it != all.rend(); ++it) {
            value += it->value;
            error += it->error;
        }
    };
    double value = 0.0;
    double error = 0.0;
    double running_value = 0.0;
    double running_error = 0.0;
    {
        auto copy = heap;
        while (!copy.empty()) {
            running_value += copy.top().value;
            running_error += copy.top().error;
            copy.pop();
        }
    }
    while (true) {
        const double target = std::max(opts.rel_tol * std::fabs(running_value), opts.abs_tol);
        if (running_error <= target) {
            totals(value, error);
            if (error <= std::max(opts.rel_tol * std::fabs(value), opts.abs_tol)) {
                res.converged = true;
                break;
            }
            running_value = value;
            running_error = error;
        }
        if (res.subdivisions >= opts.max_subdivisions) break;
        const Piece worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted at machine precision
        heap.pop();
        const Piece left = gk15(f, worst.a, mid);
        const Piece right = gk15(f, mid, worst.b);
        running_value += left.value + right.value - worst.value;
        running_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++res.subdivisions;
    }
    totals(value, error);
    res.value = value;
    res.error_estimate = error;
    return res;
}

QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f, double lower,
                                        const QuadratureOptions& opts) {
    auto g = [&](double t) {
        const double one_minus = 1.0 - t;
        const double x = lower + t / one_minus;
        if (std::isinf(x)) return 0.0;
        return f(x) / (one_minus * one_minus);
    };
    return integrate(g, 0.0, 1.0, opts);
}

QuadratureResult quadrature_semiinfinite(const std::function<double(double)>& f, double tol) {
    QuadratureOptions opts;
    opts.rel_tol = tol;
    return integrate_semiinfinite(f, 0.0, opts);
}

}  // namespace geew::oracle
