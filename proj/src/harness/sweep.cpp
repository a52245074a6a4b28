#include "govgap/harness/sweep.hpp"

#include <exception>

#include "govgap/error.hpp"
#include "govgap/welfare.hpp"

namespace govgap::harness {

namespace {

double grid_value(const SweepRange& r, int i) {
    if (i == r.n - 1) return r.hi;
    return r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(r.n - 1);
}

void check_range(const SweepRange& r, const char* what) {
    if (!(r.lo < r.hi) || r.n < 2) {
        throw UsageError(std::string(what) + " range needs lo < hi and n >= 2");
    }
}

SweepPoint solve_point(const ModelParams& p, double x, const SweepOptions& opt) {
    SweepPoint pt;
    pt.x = x;
    if (opt.config.is_baseline()) {
        const FirmSolution s = solve(p);
        pt.alpha = s.alpha_star;
        pt.d = s.d_star;
        pt.p = s.p_star;
        pt.discount = s.discount;
        pt.value = s.firm_value;
        pt.regime = s.regime;
        pt.clamped = s.clamped;
        pt.paradox = deployment_slope(p) < 0.0;
    } else {
        const ext::ExtensionSolution s = ext::solve_extension(p, opt.config);
        pt.alpha = s.alpha;
        pt.d = s.d;
        pt.p = s.p;
        pt.discount = s.discount;
        pt.value = s.value;
        pt.regime = s.regime;
        pt.clamped = s.clamped;
        pt.paradox = s.reversal;
    }
    if (opt.e) {
        const WelfareAssessment w = assess_welfare(p, Externality(*opt.e));
        pt.alpha_fb = w.alpha_fb;
        pt.alpha_sb = w.alpha_sb;
        pt.fb_paradox = w.in_fb_paradox;
        pt.sb_paradox = w.in_sb_paradox;
    }
    return pt;
}

template <class Body>
void for_each_index(int n, oracle::Execution exec, Body&& body) {
    if (exec == oracle::Execution::Serial) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        try {
            body(i);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::size_t argmin_alpha(const std::vector<SweepPoint>& pts) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].alpha < pts[best].alpha) best = i;
    return best;
}

Cell param_of(const Table& t, const std::string& key) {
    for (const auto& [k, v] : t.params)
        if (k == key) return v;
    throw UsageError("sweep table is missing parameter '" + key + "'");
}

}  // namespace

SweepAxis parse_axis(std::string_view s) {
    if (s == "theta" || s == "θ") return SweepAxis::Theta;
    if (s == "lambda" || s == "λ") return SweepAxis::Lambda;
    throw UsageError("unknown sweep axis '" + std::string(s) + "' (expected theta or lambda)");
}

std::string_view to_string(SweepAxis a) noexcept { return a == SweepAxis::Theta ? "theta" : "lambda"; }

SweepResult sweep(SweepAxis axis, SweepRange range, const ModelParams& base,
                  const SweepOptions& options, oracle::Execution exec) {
    check_range(range, "sweep");
    options.config.validate();
    if (options.e && !options.config.is_baseline())
        throw UsageError("an externality sweep uses the baseline model; drop the extension flags");

    SweepResult r;
    r.axis = axis;
    r.base = base;
    r.options = options;
    r.points.resize(static_cast<std::size_t>(range.n));
    for_each_index(range.n, exec, [&](int i) {
        const double x = grid_value(range, i);
        const ModelParams p = axis == SweepAxis::Theta ? base.with_theta(x) : base.with_lambda(x);
        r.points[static_cast<std::size_t>(i)] = solve_point(p, x, options);
    });
    r.min_index = argmin_alpha(r.points);
    return r;
}

Table sweep_table(const SweepResult& r) {
    Table t;
    t.command = "sweep";
    t.params = {{"axis", std::string(to_string(r.axis))},
                {"theta", r.base.theta()},
                {"mu", r.base.mu()},
                {"lambda", r.base.lambda()},
                {"relaxed", r.base.relaxed()},
                {"gamma", r.options.config.gamma},
                {"beta", r.options.config.beta},
                {"eta", r.options.config.eta},
                {"omega", r.options.config.omega}};
    if (r.options.e) t.params.emplace_back("e", *r.options.e);
    if (!r.points.empty()) {
        t.params.emplace_back("min_x", r.points[r.min_index].x);
        t.params.emplace_back("min_alpha", r.points[r.min_index].alpha);
    }

    t.columns = {std::string(to_string(r.axis)), "alpha", "d", "p", "discount", "value",
                 "regime", "paradox", "clamped"};
    if (r.social()) {
        for (const char* c : {"alpha_fb", "alpha_sb", "fb_paradox", "sb_paradox"}) t.columns.emplace_back(c);
    }
    for (const SweepPoint& p : r.points) {
        std::vector<Cell> row = {p.x, p.alpha, p.d, p.p, p.discount, p.value,
                                 std::string(to_string(p.regime)), p.paradox, p.clamped};
        if (r.social()) {
            row.insert(row.end(), {p.alpha_fb, p.alpha_sb, p.fb_paradox, p.sb_paradox});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

SweepResult sweep_from_table(const Table& t) {
    SweepResult r;
    r.axis = parse_axis(std::get<std::string>(param_of(t, "axis")));
    const bool relaxed = std::get<bool>(param_of(t, "relaxed"));
    r.base = ModelParams::make(std::get<double>(param_of(t, "theta")), std::get<double>(param_of(t, "mu")),
                               std::get<double>(param_of(t, "lambda")),
                               relaxed ? Assumption::Relaxed : Assumption::Strict);
    r.options.config.gamma = std::get<double>(param_of(t, "gamma"));
    r.options.config.beta = std::get<double>(param_of(t, "beta"));
    r.options.config.eta = std::get<double>(param_of(t, "eta"));
    r.options.config.omega = std::get<double>(param_of(t, "omega"));
    for (const auto& [k, v] : t.params)
        if (k == "e") r.options.e = std::get<double>(v);

    const std::string x_col(to_string(r.axis));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        SweepPoint p;
        p.x = t.number(i, x_col);
        p.alpha = t.number(i, "alpha");
        p.d = t.number(i, "d");
        p.p = t.number(i, "p");
        p.discount = t.number(i, "discount");
        p.value = t.number(i, "value");
        p.regime = t.text(i, "regime") == "corner" ? Regime::Corner : Regime::Interior;
        p.paradox = t.flag(i, "paradox");
        p.clamped = t.flag(i, "clamped");
        if (r.social()) {
            p.alpha_fb = t.number(i, "alpha_fb");
            p.alpha_sb = t.number(i, "alpha_sb");
            p.fb_paradox = t.flag(i, "fb_paradox");
            p.sb_paradox = t.flag(i, "sb_paradox");
        }
        r.points.push_back(p);
    }
    r.min_index = r.points.empty() ? 0 : argmin_alpha(r.points);
    return r;
}

ParadoxMap paradox_map(SweepRange theta, SweepRange lambda, double mu, oracle::Execution exec) {
    check_range(theta, "theta");
    check_range(lambda, "lambda");
    ParadoxMap m;
    for (int j = 0; j < theta.n; ++j) m.thetas.push_back(grid_value(theta, j));
    for (int i = 0; i < lambda.n; ++i) m.lambdas.push_back(grid_value(lambda, i));
    m.paradox.assign(static_cast<std::size_t>(lambda.n), std::vector<bool>(static_cast<std::size_t>(theta.n)));
    m.alpha.assign(static_cast<std::size_t>(lambda.n), std::vector<double>(static_cast<std::size_t>(theta.n)));
    // Rows are written by exactly one thread each; vector<bool> rows are separate objects.
    for_each_index(lambda.n, exec, [&](int i) {
        const auto row = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < m.thetas.size(); ++j) {
            const ModelParams p = ModelParams::make(m.thetas[j], mu, m.lambdas[row], Assumption::Relaxed);
            m.alpha[row][j] = optimal_deployment(p);
            m.paradox[row][j] = deployment_slope(p) < 0.0;
        }
    });
    return m;
}

}  // namespace govgap::harness
