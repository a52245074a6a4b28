#include "govgap/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace govgap::oracle {

GridSpec GridSpec::for_params(const ModelParams& p) {
    const double alpha0 = p.theta() + p.mu();
    GridSpec s;
    s.alpha_max = 2.0 * alpha0;
    s.d_max = 4.0 * alpha0;
    return s;
}

void GridSpec::validate() const {
    if (!(alpha_max > 0.0) || !std::isfinite(alpha_max))
        throw DomainError("GridSpec: alpha_max must be finite and > 0");
    if (!(d_max > 0.0) || !std::isfinite(d_max))
        throw DomainError("GridSpec: d_max must be finite and > 0");
    if (coarse_points < 100) throw DomainError("GridSpec: coarse_points must be >= 100");
    if (refine_rounds < 1) throw DomainError("GridSpec: refine_rounds must be >= 1");
}

int GridSpec::effective_rounds() const {
    const double coarse_step = std::max(alpha_max, d_max) / (coarse_points - 1);
    int rounds = refine_rounds;
    while (coarse_step / std::pow(10.0, rounds) > kTargetResolution) ++rounds;
    return rounds;
}

double GridSpec::final_step_alpha() const {
    return alpha_max / (coarse_points - 1) / std::pow(10.0, effective_rounds());
}

double GridSpec::final_step_d() const {
    return d_max / (coarse_points - 1) / std::pow(10.0, effective_rounds());
}

namespace detail {

void throw_non_finite(double a, double d, double v) {
    std::ostringstream os;
    os << "objective is not finite at (alpha=" << a << ", d=" << d << "): " << v;
    throw NonFiniteError(os.str(), a, d);
}

Axis window_axis(double center, double width, double lo, double hi, int n) {
    double a = std::max(lo, center - 0.5 * width);
    const double b = std::min(hi, a + width);
    a = std::max(lo, b - width);
    return Axis{a, (b - a) / (n - 1), n};
}

}  // namespace detail

Maximum1D maximize_1d(const std::function<double(double)>& objective, double lo, double hi) {
    if (!(lo < hi)) throw DomainError("maximize_1d: requires lo < hi");
    constexpr int n = 1001;
    const double target = 1e-10 * std::max(1.0, hi - lo);

    auto scan = [&](const detail::Axis& ax, Maximum1D& best) {
        for (int i = 0; i < ax.n; ++i) {
            const double x = ax.at(i);
            const double v = objective(x);
            if (!std::isfinite(v)) detail::throw_non_finite(x, 0.0, v);
            if (v > best.value_hat) best = {x, v};
        }
    };

    Maximum1D best{lo, -INFINITY};
    double width = hi - lo;
    detail::Axis ax{lo, width / (n - 1), n};
    scan(ax, best);
    while (ax.step > target) {
        width /= 10.0;
        ax = detail::window_axis(best.x_hat, width, lo, hi, n);
        scan(ax, best);
    }
    return best;
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double forward_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x)) / h;
}

double backward_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x) - f(x - h)) / h;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw DomainError("bisect: requires lo < hi");
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0)) {
        std::ostringstream os;
        os << "bisect: no sign change on [" << lo << ", " << hi << "] (f(lo)=" << flo
           << ", f(hi)=" << fhi << ")";
        throw BracketError(os.str());
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol || mid == lo || mid == hi) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    std::ostringstream os;
    os << "bisect: interval [" << lo << ", " << hi << "] still wider than " << tol
       << " after 200 iterations";
    throw ConvergenceError(os.str());
}

}  // namespace govgap::oracle
