#include "geew/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "geew/cli/table.hpp"
#include "geew/distribution.hpp"
#include "geew/error.hpp"
#include "geew/identities.hpp"
#include "geew/oracle/mellin_barnes.hpp"
#include "geew/oracle/quadrature.hpp"
#include "geew/specfun.hpp"

namespace geew::cli {

namespace {

// Bad command-line input that CLI11 cannot see (grids, files).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Globals {
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 1;
    int verbose = 0;
    double rel_tol = TruncationPolicy{}.rel_tol;
    int max_terms = TruncationPolicy{}.max_terms;
    bool asymptotic = false;

    TruncationPolicy policy() const {
        TruncationPolicy p;
        p.rel_tol = rel_tol;
        p.max_terms = max_terms;
        p.allow_asymptotic = asymptotic;
        p.validate();
        return p;
    }
};

struct Result {
    Table table;
    bool verify_failed = false;
    std::vector<std::string> warnings;
};

std::vector<double> parse_grid(const std::string& spec) {
    double v[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const auto next = i < 2 ? spec.find(':', pos) : spec.size();
        if (next == std::string::npos) throw UsageError("grid '" + spec + "' is not of the form start:stop:step");
        const std::string part = spec.substr(pos, next - pos);
        char* end = nullptr;
        v[i] = std::strtod(part.c_str(), &end);
        if (part.empty() || end != part.c_str() + part.size() || !std::isfinite(v[i]))
            throw UsageError("grid '" + spec + "': '" + part + "' is not a number");
        pos = next + 1;
    }
    if (!(v[2] > 0.0) || v[1] < v[0]) throw UsageError("grid '" + spec + "' needs step > 0 and stop >= start");
    const double span = (v[1] - v[0]) / v[2];
    if (span > 1e7) throw UsageError("grid '" + spec + "' has more than 1e7 points");
    // the tolerance keeps 0:5:0.1 at 51 points despite 5/0.1 = 49.999...
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9 * std::max(1.0, span))) + 1;
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = v[0] + static_cast<double>(i) * v[2];
    return xs;
}

std::vector<double> points(const std::string& grid, const std::vector<double>& list, const char* what) {
    if (!grid.empty() && !list.empty()) throw UsageError(std::string("give either --grid or ") + what + ", not both");
    if (!grid.empty()) return parse_grid(grid);
    if (list.empty()) throw UsageError(std::string("one of --grid or ") + what + " is required");
    return list;
}

std::string mode_name(bool asymptotic) { return asymptotic ? "asymptotic" : "convergent"; }

// labels use the shortest round-trip spelling; data columns keep 17 digits
std::string short_double(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string params_text(std::initializer_list<std::pair<const char*, double>> ps) {
    std::string s;
    for (const auto& [k, v] : ps) {
        if (!s.empty()) s += ' ';
        s += std::string(k) + '=' + short_double(v);
    }
    return s;
}

std::string theta_text(const Theta& t) {
    return params_text({{"lambda", t.lambda}, {"beta", t.beta}, {"k", t.k}, {"alpha", t.alpha}});
}

void add_theta(CLI::App* sub, Theta& t) {
    sub->add_option("--lambda", t.lambda, "lambda > 0")->required();
    sub->add_option("--beta", t.beta, "beta > 0")->required();
    sub->add_option("--k", t.k, "k > 0")->required();
    sub->add_option("--alpha", t.alpha, "alpha > 0")->required();
}

const std::vector<std::string> kVerifyColumns = {"identity", "parameters", "lhs",  "rhs",
                                                 "rel_residual", "terms_used", "mode", "status"};

std::vector<Cell> verify_row(const std::string& name, const std::string& params, const IdentityReport& r, double tol) {
    const bool pass = r.rel_residual < tol;
    return {name, params, r.lhs, r.rhs, r.rel_residual, static_cast<double>(r.terms_used),
            mode_name(r.mode == IdentityMode::asymptotic), pass ? std::string("pass") : std::string("fail")};
}

double quadrature_moment(const Theta& t, double r) {
    oracle::QuadratureOptions o;
    o.rel_tol = 1e-12;
    o.max_subdivisions = 20000;
    return oracle::integrate_semiinfinite(
               [&](double x) { return x > 0.0 ? std::pow(x, r) * geew_pdf(t, x) : 0.0; }, 0.0, o)
        .value;
}

// series moment against quadrature, in the identity report layout
IdentityReport moment_report(const Theta& t, double r, const std::string& method, const TruncationPolicy& p) {
    const SeriesValue s = method == "integer" ? raw_moment_integer_alpha(t, r, p) : raw_moment_series(t, r, p);
    IdentityReport rep;
    rep.lhs = s.value;
    rep.rhs = quadrature_moment(t, r);
    rep.abs_residual = std::fabs(rep.lhs - rep.rhs);
    rep.rel_residual = rep.abs_residual / std::max(std::fabs(rep.rhs), 1e-300);
    rep.lhs_tail_estimate = s.tail_estimate;
    rep.terms_used = s.terms_used;
    rep.mode = s.asymptotic ? IdentityMode::asymptotic : IdentityMode::convergent;
    rep.converged = s.converged;
    return rep;
}

struct VerifyTask {
    std::string name;
    std::string params;
    std::function<IdentityReport()> eval;
};

// Tasks run on worker threads; rows come back in task order.
Result run_verify_tasks(const std::vector<VerifyTask>& tasks, double tol, unsigned threads, std::ostream& err) {
    std::vector<std::optional<IdentityReport>> reports(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                reports[i] = tasks[i].eval();
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    Result res;
    res.table.columns = kVerifyColumns;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (reports[i]) {
            res.table.add_row(verify_row(tasks[i].name, tasks[i].params, *reports[i], tol));
            if (!(reports[i]->rel_residual < tol)) res.verify_failed = true;
            if (reports[i]->warning && !reports[i]->message.empty())
                res.warnings.push_back(tasks[i].name + " " + tasks[i].params + ": " + reports[i]->message);
        } else {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            res.table.add_row({tasks[i].name, tasks[i].params, nan, nan, nan, 0.0, std::string("error"),
                               std::string("fail")});
            res.verify_failed = true;
            err << "geew: verify " << tasks[i].name << ' ' << tasks[i].params << ": " << errors[i] << '\n';
        }
    }
    return res;
}

// The parameter sets used by the acceptance run.
std::vector<VerifyTask> all_tasks(const TruncationPolicy& p) {
    std::vector<VerifyTask> tasks;
    for (const Theta& t : {Theta{1, 0.25, 2, 0.5}, Theta{1, 0.05, 1.5, 0.5}, Theta{2, 0.2, 1.3, 1.7}})
        tasks.push_back({"a", theta_text(t), [t, p] { return identity_a(t, p); }});
    for (const Theta& t : {Theta{1, 0.5, 0.8, 2}, Theta{1.5, 0.3, 1.0, 3}})
        tasks.push_back({"b", theta_text(t), [t, p] { return identity_b(t, p); }});
    for (const IdentityCParams& c : {IdentityCParams{1, 1, 0.5}, IdentityCParams{2, 0.5, 0.3}})
        tasks.push_back({"c", params_text({{"lambda", c.lambda}, {"u", c.u}, {"alpha", c.alpha}}),
                         [c, p] { return identity_c(c, p); }});
    for (const IdentityDParams& d : {IdentityDParams{1, 1, 0.4}, IdentityDParams{0.5, 2, 1.2}})
        tasks.push_back({"d", params_text({{"lambda", d.lambda}, {"b", d.b}, {"alpha", d.alpha}}),
                         [d, p] { return identity_d(d, p); }});
    for (const Theta& t : {Theta{1, 0.5, 0.8, 1.5}, Theta{2, 1, 0.5, 0.7}, Theta{0.8, 0.3, 0.6, 2.5}})
        tasks.push_back({"moments", theta_text(t) + " r=1", [t, p] { return moment_report(t, 1.0, "series", p); }});
    return tasks;
}

Table value_table(const std::string& fn, double value, double tail = 0.0, std::size_t terms = 0) {
    Table t;
    t.columns = {"function", "value", "tail_estimate", "terms_used"};
    t.add_row({fn, value, tail, static_cast<double>(terms)});
    return t;
}

void check_series(const std::string& fn, const SeriesValue& s, Result& res) {
    if (s.asymptotic) res.warnings.push_back(fn + ": divergent series optimally truncated at its smallest term");
    if (!s.converged && !s.asymptotic)
        throw ConvergenceError(fn + ": series did not reach the tolerance within max_terms (tail " +
                               format_double(s.tail_estimate) + ")");
}

Table series_table(const std::string& fn, const SeriesValue& s, Result& res) {
    check_series(fn, s, res);
    return value_table(fn, s.value, s.tail_estimate, s.terms_used);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gamma-exponentiated exponential Weibull distribution toolkit", "geew"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("-o,--output", g.output, "write the table to this file instead of stdout");
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--rel-tol", g.rel_tol, "series relative tolerance")->capture_default_str();
    app.add_option("--max-terms", g.max_terms, "series term cap")->capture_default_str();
    app.add_flag("--asymptotic", g.asymptotic, "allow optimal truncation of divergent series");
    app.add_flag("-v,--verbose", g.verbose, "diagnostics on stderr");
    const char* env_config = std::getenv(kConfigEnv);
    app.set_config("--config", env_config ? env_config : "", "TOML/INI file with option defaults");

    std::function<Result()> action;

    // dist ---------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "distribution quantities");
    dist->require_subcommand(1);
    Theta theta{};
    std::string grid;
    std::vector<double> xs, ps, rs;
    std::size_t n_samples = 1000;
    std::string moment_method = "series";

    for (const char* name : {"pdf", "cdf", "survival"}) {
        auto* sub = dist->add_subcommand(name, std::string(name) + " on a grid; columns x,value");
        add_theta(sub, theta);
        sub->add_option("--grid", grid, "start:stop:step");
        sub->add_option("--x", xs, "explicit points")->delimiter(',');
        sub->callback([&, name = std::string(name)] {
            action = [&, name] {
                Result res;
                res.table.columns = {"x", "value"};
                for (double x : points(grid, xs, "--x")) {
                    const double v = name == "pdf" ? geew_pdf(theta, x)
                                     : name == "cdf" ? geew_cdf(theta, x)
                                                     : geew_survival(theta, x);
                    res.table.add_row({x, v});
                }
                return res;
            };
        });
    }
    {
        auto* sub = dist->add_subcommand("quantile", "quantile function; columns p,value");
        add_theta(sub, theta);
        sub->add_option("--grid", grid, "start:stop:step over p");
        sub->add_option("--p", ps, "probabilities in (0,1)")->delimiter(',');
        sub->callback([&] {
            action = [&] {
                Result res;
                res.table.columns = {"p", "value"};
                for (double p : points(grid, ps, "--p")) res.table.add_row({p, geew_quantile(theta, p)});
                return res;
            };
        });
    }
    {
        auto* sub = dist->add_subcommand("sample", "inverse-transform draws; column x");
        add_theta(sub, theta);
        sub->add_option("--n", n_samples, "number of draws")->capture_default_str();
        sub->callback([&] {
            action = [&] {
                Result res;
                res.table.columns = {"x"};
                for (double x : geew_sample(theta, n_samples, g.seed)) res.table.add_row({x});
                return res;
            };
        });
    }
    {
        auto* sub = dist->add_subcommand("moment", "raw moments E X^r; columns r,moment,tail_estimate");
        add_theta(sub, theta);
        sub->add_option("--r", rs, "orders")->delimiter(',')->default_val(std::vector<double>{1.0});
        sub->add_option("--method", moment_method, "series, integer (integer alpha) or quadrature")
            ->check(CLI::IsMember({"series", "integer", "quadrature"}))
            ->capture_default_str();
        sub->callback([&] {
            action = [&] {
                Result res;
                res.table.columns = {"r", "moment", "tail_estimate"};
                const TruncationPolicy p = g.policy();
                for (double r : rs) {
                    if (moment_method == "quadrature") {
                        theta.validate();
                        res.table.add_row({r, quadrature_moment(theta, r), 0.0});
                        continue;
                    }
                    const SeriesValue s = moment_method == "integer" ? raw_moment_integer_alpha(theta, r, p)
                                                                     : raw_moment_series(theta, r, p);
                    check_series("moment r=" + short_double(r), s, res);
                    res.table.add_row({r, s.value, s.tail_estimate});
                }
                return res;
            };
        });
    }

    // verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "evaluate identities and moment cross-checks");
    verify->require_subcommand(1);
    double tol = 1e-5;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    verify->add_option("--tol", tol, "pass threshold on rel_residual")->capture_default_str();
    std::string form = "printed";
    IdentityCParams cpar{};
    IdentityDParams dpar{};
    bool perturb = false;

    // a single identity propagates its errors (exit 2) instead of reporting an error row
    auto single = [&](std::string name, std::function<IdentityReport()> eval, std::function<std::string()> params) {
        action = [&, name, eval, params] {
            Result res;
            res.table.columns = kVerifyColumns;
            const IdentityReport r = eval();
            res.table.add_row(verify_row(name, params(), r, tol));
            res.verify_failed = !(r.rel_residual < tol);
            if (r.warning && !r.message.empty()) res.warnings.push_back(name + ": " + r.message);
            return res;
        };
    };
    {
        auto* sub = verify->add_subcommand("a", "incomplete-gamma double series = 1");
        add_theta(sub, theta);
        sub->callback([&] {
            single("a", [&] { return identity_a(theta, g.policy()); }, [&] { return theta_text(theta); });
        });
    }
    {
        auto* sub = verify->add_subcommand("b", "Fox-Wright finite sum = alpha (integer alpha)");
        add_theta(sub, theta);
        sub->add_option("--form", form, "printed or corrected coefficient layout")
            ->check(CLI::IsMember({"printed", "corrected"}))
            ->capture_default_str();
        sub->callback([&] {
            single(
                "b",
                [&] {
                    return identity_b(theta, g.policy(),
                                      form == "corrected" ? IdentityForm::corrected : IdentityForm::printed);
                },
                [&] { return theta_text(theta); });
        });
    }
    {
        auto* sub = verify->add_subcommand("c", "Meijer G series = 2 sqrt(pi) / (u^(alpha+1) lambda^2)");
        sub->add_option("--lambda", cpar.lambda)->required();
        sub->add_option("--u", cpar.u)->required();
        sub->add_option("--alpha", cpar.alpha)->required();
        sub->callback([&] {
            single("c", [&] { return identity_c(cpar, g.policy()); },
                   [&] { return params_text({{"lambda", cpar.lambda}, {"u", cpar.u}, {"alpha", cpar.alpha}}); });
        });
    }
    {
        auto* sub = verify->add_subcommand("d", "Whittaker series = alpha (lambda/b)^((alpha+1)/2) e^(-b lambda/2)");
        sub->add_option("--lambda", dpar.lambda)->required();
        sub->add_option("--b", dpar.b)->required();
        sub->add_option("--alpha", dpar.alpha)->required();
        sub->add_flag("--perturb", perturb, "average over b +/- eps when an index is near degenerate");
        sub->callback([&] {
            single(
                "d",
                [&] {
                    specfun::WhittakerOptions o;
                    o.perturbation = perturb;
                    o.policy = g.policy();
                    return identity_d(dpar, g.policy(), o);
                },
                [&] { return params_text({{"lambda", dpar.lambda}, {"b", dpar.b}, {"alpha", dpar.alpha}}); });
        });
    }
    {
        auto* sub = verify->add_subcommand("moments", "moment series against quadrature");
        add_theta(sub, theta);
        sub->add_option("--r", rs, "orders")->delimiter(',')->default_val(std::vector<double>{1.0});
        sub->add_option("--method", moment_method, "series or integer")
            ->check(CLI::IsMember({"series", "integer"}))
            ->capture_default_str();
        sub->callback([&] {
            action = [&] {
                std::vector<VerifyTask> tasks;
                const TruncationPolicy p = g.policy();
                for (double r : rs)
                    tasks.push_back({"moments", theta_text(theta) + " r=" + short_double(r),
                                     [&, r, p] { return moment_report(theta, r, moment_method, p); }});
                return run_verify_tasks(tasks, tol, threads, err);
            };
        });
    }
    {
        auto* sub = verify->add_subcommand("all", "every built-in parameter set");
        sub->add_option("--threads", threads, "worker threads")->capture_default_str();
        sub->callback([&] { action = [&] { return run_verify_tasks(all_tasks(g.policy()), tol, threads, err); }; });
    }

    // specfun ------------------------------------------------------------
    auto* sf = app.add_subcommand("specfun", "special functions; columns function,value,tail_estimate,terms_used");
    sf->require_subcommand(1);
    double a = 0.0, b = 0.0, z = 0.0, s = 0.0, x = 0.0, p_arg = 0.0, A = 1.0;
    double mu = 1.0, nu = 1.0, rho = 1.0, a1 = 0.0;
    std::vector<double> bvec;
    bool unstarred = false, with_oracle = false;

    auto simple = [&](const char* name, const char* help, std::vector<std::pair<const char*, double*>> opts,
                      std::function<Table(Result&)> fn) {
        auto* sub = sf->add_subcommand(name, help);
        for (auto& [opt, ptr] : opts) sub->add_option(opt, *ptr)->required();
        sub->callback([&, fn] {
            action = [&, fn] {
                Result res;
                res.table = fn(res);
                return res;
            };
        });
        return sub;
    };
    {
        auto* sub = sf->add_subcommand("lambertw", "principal branch W(x), x >= 0");
        sub->add_option("x", x, "argument")->required();
        sub->callback([&] {
            action = [&] {
                Result res;
                res.table = value_table("lambertw", specfun::lambert_w_principal(x));
                return res;
            };
        });
    }
    simple("gammap", "regularized lower incomplete gamma P(a,z)", {{"--a", &a}, {"--z", &z}},
           [&](Result&) { return value_table("gammap", specfun::regularized_gamma_p(a, z)); });
    simple("gammaq", "regularized upper incomplete gamma Q(a,z)", {{"--a", &a}, {"--z", &z}},
           [&](Result&) { return value_table("gammaq", specfun::regularized_gamma_q(a, z)); });
    simple("gamma-lower", "lower incomplete gamma", {{"--a", &a}, {"--z", &z}},
           [&](Result&) { return value_table("gamma-lower", specfun::lower_incomplete_gamma(a, z)); });
    simple("gamma-upper", "upper incomplete gamma, a > 0", {{"--a", &a}, {"--z", &z}},
           [&](Result&) { return value_table("gamma-upper", specfun::upper_incomplete_gamma(a, z)); });
    simple("inv-gammap", "inverse of P(a, .)", {{"--a", &a}, {"--p", &p_arg}},
           [&](Result&) { return value_table("inv-gammap", specfun::inverse_regularized_gamma_p(a, p_arg)); });
    simple("pochhammer", "(a)_s = Gamma(a+s)/Gamma(a)", {{"--a", &a}, {"--s", &s}},
           [&](Result&) { return value_table("pochhammer", specfun::pochhammer(a, s)); });
    simple("kummer", "1F1(a; b; z)", {{"--a", &a}, {"--b", &b}, {"--z", &z}},
           [&](Result& res) { return series_table("kummer", specfun::kummer_1f1(a, b, z, g.policy()), res); });
    simple("foxwright", "1Psi0*[(a,A); z] (or 1Psi0 with --unstarred)", {{"--a", &a}, {"--A", &A}, {"--z", &z}},
           [&](Result& res) {
               return series_table("foxwright", specfun::fox_wright_1psi0({a, A, z, !unstarred}, g.policy()), res);
           })
        ->add_flag("--unstarred", unstarred, "multiply by Gamma(a)");
    simple("whittaker", "W_{a,b}(z)", {{"--a", &a}, {"--b", &b}, {"--z", &z}}, [&](Result&) {
        specfun::WhittakerOptions o;
        o.perturbation = perturb;
        o.policy = g.policy();
        return value_table("whittaker", specfun::whittaker_w({a, b, z}, o));
    })->add_flag("--perturb", perturb, "average over b +/- eps when 2b is near an integer");
    simple("imu", "I_mu(a, nu, rho) by the split binomial series", {{"--mu", &mu}, {"--a", &a}, {"--nu", &nu}, {"--rho", &rho}},
           [&](Result& res) { return series_table("imu", i_mu_series({mu, a, nu, rho}, g.policy()), res); });
    {
        auto* sub = sf->add_subcommand("meijerg1331", "G^{3,1}_{1,3}(z | a1; b1,b2,b3) by residues");
        sub->add_option("--a1", a1)->required();
        sub->add_option("--b", bvec, "b1,b2,b3")->delimiter(',')->expected(3)->required();
        sub->add_option("--z", z)->required();
        sub->add_flag("--oracle", with_oracle, "add the Mellin-Barnes contour value as column oracle");
        sub->callback([&] {
            action = [&] {
                Result res;
                const specfun::MeijerG1331Params mp{a1, bvec[0], bvec[1], bvec[2], z};
                res.table = series_table("meijerg1331", specfun::meijer_g_1331(mp, g.policy()), res);
                if (with_oracle) {
                    res.table.columns.push_back("oracle");
                    res.table.rows[0].push_back(oracle::mellin_barnes_g1331(mp).value);
                }
                return res;
            };
        });
    }

    // inspect ------------------------------------------------------------
    auto* inspect = app.add_subcommand("inspect", "read a CSV or JSON table written by geew and re-emit it");
    std::string in_path;
    inspect->add_option("file", in_path, "table file")->required();
    inspect->callback([&] {
        action = [&] {
            Result res;
            const std::string text = read_file(in_path);
            try {
                res.table = read_table(text, detect_format(in_path, text));
            } catch (const std::runtime_error& e) {
                throw UsageError(in_path + ": " + e.what());
            }
            return res;
        };
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    if (!action) {
        err << "geew: no command\n";
        return exit_usage;
    }

    Result res;
    try {
        res = action();
        res.table.command = [&] {
            std::string c;
            for (const auto& s : args) c += (c.empty() ? "" : " ") + s;
            return c;
        }();
    } catch (const UsageError& e) {
        err << "geew: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "geew: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "geew: numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    for (const auto& w : res.warnings) err << "geew: warning: " << w << '\n';

    // inspect keeps the input format unless one is asked for
    Format fmt = parse_format(g.format);
    if (inspect->parsed() && app.get_option("--format")->count() == 0)
        fmt = detect_format(in_path, read_file(in_path));
    if (g.output.empty()) {
        write_table(out, res.table, fmt);
    } else {
        std::ofstream f(g.output, std::ios::binary);
        if (!f) {
            err << "geew: cannot write '" << g.output << "'\n";
            return exit_usage;
        }
        write_table(f, res.table, fmt);
    }
    if (g.verbose) err << "geew: " << res.table.rows.size() << " rows\n";
    return res.verify_failed ? exit_verify_failed : exit_ok;
}

}  // namespace geew::cli
