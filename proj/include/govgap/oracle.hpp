#pragma once

// Brute-force verification engine: nested grid + window refinement over the
// raw objectives, plus finite differences and bisection. Nothing here reads
// the closed forms it is used to check.
//
// The 2-D grid kernel exists in two versions: a plain serial double loop
// (reference) and an OpenMP row-parallel loop. Both reduce per-row maxima in
// row order so the result is bit-identical; ties go to the lowest α, then the
// lowest d.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "govgap/error.hpp"
#include "govgap/model.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace govgap::oracle {

enum class Execution { Serial, Parallel };

/// Finest grid step the refinement must reach in each coordinate.
inline constexpr double kTargetResolution = 1e-5;

struct GridSpec {
    double alpha_max = 1.0;
    double d_max = 1.0;
    int coarse_points = 400;
    /// Minimum number of 10× refinements; more are added until the step is
    /// at most kTargetResolution.
    int refine_rounds = 3;

    /// α ceiling 2(θ+μ), d ceiling 4(θ+μ).
    static GridSpec for_params(const ModelParams& p);

    void validate() const;
    /// Refinement rounds actually run.
    int effective_rounds() const;
    double final_step_alpha() const;
    double final_step_d() const;
};

struct OracleResult {
    double alpha_hat = 0.0;
    double d_hat = 0.0;
    double value_hat = 0.0;
    std::int64_t evaluations = 0;
    /// Incumbent value after the coarse pass and after each refinement.
    std::vector<double> round_values;

    friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

struct Maximum1D {
    double x_hat = 0.0;
    double value_hat = 0.0;
};

namespace detail {

struct Axis {
    double lo;
    double step;
    int n;
    double at(int i) const noexcept { return lo + step * i; }
};

struct Cell {
    int i = -1;
    int j = -1;
    double value = -INFINITY;
};

[[noreturn]] void throw_non_finite(double a, double d, double v);

/// Window of width `width` around `center`, kept inside [lo, hi].
Axis window_axis(double center, double width, double lo, double hi, int n);

template <class F>
Cell best_in_row(F& f, const Axis& a, const Axis& d, int i, int& bad_j) {
    Cell best;
    const double alpha = a.at(i);
    for (int j = 0; j < d.n; ++j) {
        const double v = f(alpha, d.at(j));
        if (!std::isfinite(v)) {
            bad_j = j;
            return best;
        }
        if (v > best.value) best = {i, j, v};
    }
    return best;
}

/// Serial reference: straightforward α-major scan with strict improvement.
template <class F>
Cell grid_argmax_serial(F& f, const Axis& a, const Axis& d) {
    Cell best;
    for (int i = 0; i < a.n; ++i) {
        const double alpha = a.at(i);
        for (int j = 0; j < d.n; ++j) {
            const double v = f(alpha, d.at(j));
            if (!std::isfinite(v)) throw_non_finite(alpha, d.at(j), v);
            if (v > best.value) best = {i, j, v};
        }
    }
    return best;
}

template <class F>
Cell grid_argmax_parallel(F& f, const Axis& a, const Axis& d) {
    std::vector<Cell> rows(static_cast<std::size_t>(a.n));
    std::vector<int> bad(static_cast<std::size_t>(a.n), -1);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.n; ++i) {
        rows[static_cast<std::size_t>(i)] = best_in_row(f, a, d, i, bad[static_cast<std::size_t>(i)]);
    }
    Cell best;
    for (int i = 0; i < a.n; ++i) {
        const int j = bad[static_cast<std::size_t>(i)];
        if (j >= 0) throw_non_finite(a.at(i), d.at(j), f(a.at(i), d.at(j)));
        const Cell& c = rows[static_cast<std::size_t>(i)];
        if (c.value > best.value) best = c;
    }
    return best;
}

}  // namespace detail

/// Maximizes objective(α, d) over [0, alpha_max] × [0, d_max].
/// Throws NonFiniteError naming the first (α-major) point with a non-finite value.
template <class F>
OracleResult maximize_profit(F&& objective, const GridSpec& spec,
                             Execution exec = Execution::Parallel) {
    spec.validate();
    const int n = spec.coarse_points;
    auto run = [&](const detail::Axis& a, const detail::Axis& d) {
        return exec == Execution::Serial ? detail::grid_argmax_serial(objective, a, d)
                                         : detail::grid_argmax_parallel(objective, a, d);
    };

    double a_width = spec.alpha_max;
    double d_width = spec.d_max;
    detail::Axis a{0.0, a_width / (n - 1), n};
    detail::Axis d{0.0, d_width / (n - 1), n};

    OracleResult r;
    detail::Cell c = run(a, d);
    r.alpha_hat = a.at(c.i);
    r.d_hat = d.at(c.j);
    r.value_hat = c.value;
    r.evaluations = static_cast<std::int64_t>(n) * n;
    r.round_values.push_back(r.value_hat);

    const int rounds = spec.effective_rounds();
    for (int round = 0; round < rounds; ++round) {
        a_width /= 10.0;
        d_width /= 10.0;
        a = detail::window_axis(r.alpha_hat, a_width, 0.0, spec.alpha_max, n);
        d = detail::window_axis(r.d_hat, d_width, 0.0, spec.d_max, n);
        c = run(a, d);
        r.evaluations += static_cast<std::int64_t>(n) * n;
        if (c.value > r.value_hat) {
            r.alpha_hat = a.at(c.i);
            r.d_hat = d.at(c.j);
            r.value_hat = c.value;
        }
        r.round_values.push_back(r.value_hat);
    }
    return r;
}

/// Grid + refinement maximizer on [lo, hi]; final step ≤ 1e-10·max(1, hi−lo).
Maximum1D maximize_1d(const std::function<double(double)>& objective, double lo, double hi);

/// (f(x+h) − f(x−h)) / 2h.
double central_difference(const std::function<double(double)>& f, double x, double h);

/// One-sided differences, for checking matched slopes at a kink.
double forward_difference(const std::function<double(double)>& f, double x, double h);
double backward_difference(const std::function<double(double)>& f, double x, double h);

/// Root of f on [lo, hi] to interval width ≤ tol in at most 200 halvings.
/// Throws BracketError without a sign change, ConvergenceError if 200
/// halvings do not reach tol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace govgap::oracle
