#include "govgap/welfare.hpp"

#include <algorithm>
#include <cmath>

#include "govgap/error.hpp"

namespace govgap {

Externality::Externality(double e) : e_(e) {
    if (!std::isfinite(e) || e < 0.0) throw DomainError("externality e must be finite and >= 0");
}

double first_best_vertex(const ModelParams& p, const Externality& ext) noexcept {
    const double scaled = ext.E() * p.lambda();
    const double x = scaled * p.theta();
    if (regime_for_exposure(x) == Regime::Corner) return p.mu() + p.theta() * (1.0 - scaled);
    return p.theta() + p.mu() + 1.0 - 2.0 * std::sqrt(x);
}

double first_best_deployment(const ModelParams& p, const Externality& ext) noexcept {
    return std::max(0.0, first_best_vertex(p, ext));
}

double second_best_vertex(const ModelParams& p, const Externality& ext) noexcept {
    // The firm's own regime split: the regulator scales d*(α) but cannot move λθ.
    if (classify_regime(p) == Regime::Corner)
        return p.mu() + p.theta() * (1.0 - ext.E() * p.lambda());
    return p.theta() + p.mu() + 1.0 - (2.0 + ext.e()) * std::sqrt(p.exposure());
}

double second_best_deployment(const ModelParams& p, const Externality& ext) noexcept {
    return std::max(0.0, second_best_vertex(p, ext));
}

double social_welfare(double alpha, double d, const ModelParams& p, const Externality& ext) {
    const double external = ext.e() * breach_probability(alpha, d) * p.lambda() * alpha * p.theta();
    return profit(alpha, d, p) - external;
}

double sb_welfare_objective(double alpha, const ModelParams& p, const Externality& ext) {
    if (classify_regime(p) == Regime::Corner) {
        return (p.theta() + p.mu()) * alpha - 0.5 * alpha * alpha -
               ext.E() * p.lambda() * alpha * p.theta();
    }
    const double coef = p.theta() + p.mu() + 1.0 - (2.0 + ext.e()) * std::sqrt(p.exposure());
    return coef * alpha - 0.5 * alpha * alpha;
}

ParadoxThresholds paradox_thresholds(double lambda, const Externality& ext) {
    if (!std::isfinite(lambda) || lambda <= 0.0) throw DomainError("lambda must be finite and > 0");
    ParadoxThresholds t;
    const double half = (2.0 + ext.e()) / 2.0;
    t.private_threshold = lambda;
    t.fb_threshold = ext.E() * lambda;
    t.sb_threshold = half * half * lambda;
    t.private_corner = lambda > 1.0;
    t.social_corner = ext.E() * lambda > 1.0;
    return t;
}

WelfareAssessment assess_welfare(const ModelParams& p, const Externality& ext) {
    WelfareAssessment w;
    const ParadoxThresholds t = paradox_thresholds(p.lambda(), ext);
    w.private_threshold = t.private_threshold;
    w.fb_threshold = t.fb_threshold;
    w.sb_threshold = t.sb_threshold;

    w.alpha_private = optimal_deployment(p);
    const double fb = first_best_vertex(p, ext);
    const double sb = second_best_vertex(p, ext);
    w.fb_clamped = fb <= 0.0;
    w.sb_clamped = sb <= 0.0;
    w.alpha_fb = w.fb_clamped ? 0.0 : fb;
    w.alpha_sb = w.sb_clamped ? 0.0 : sb;

    const double theta = p.theta();
    const bool private_corner = classify_regime(p) == Regime::Corner;
    const bool fb_corner = regime_for_exposure(ext.E() * p.exposure()) == Regime::Corner;

    w.in_private_paradox = private_corner ? t.private_corner : theta < t.private_threshold;
    w.in_fb_paradox = fb_corner ? t.social_corner : theta < t.fb_threshold;
    w.in_sb_paradox = private_corner ? t.social_corner : theta < t.sb_threshold;

    w.admits_private_paradox = t.private_corner;
    w.admits_fb_paradox = t.social_corner;
    w.admits_sb_paradox = t.social_corner;

    if (w.alpha_fb > 0.0) {
        const ModelParams planner =
            ModelParams::make(p.theta(), p.mu(), ext.E() * p.lambda(), Assumption::Relaxed);
        w.welfare_fb = social_welfare(w.alpha_fb, optimal_defense(w.alpha_fb, planner), p, ext);
    }
    w.welfare_sb = sb_welfare_objective(w.alpha_sb, p, ext);
    w.welfare_at_private = sb_welfare_objective(w.alpha_private, p, ext);
    return w;
}

DiscountValues discount_functions(double x, const Externality& ext) {
    if (!std::isfinite(x) || x < 0.0) throw DomainError("discount_functions: x must be >= 0");
    auto h = [](double v) { return v <= 1.0 ? v : 2.0 * std::sqrt(v) - 1.0; };
    DiscountValues r;
    r.h_x = h(x);
    r.s_x = x <= 1.0 ? ext.E() * x : (2.0 + ext.e()) * std::sqrt(x) - 1.0;
    r.h_ex = h(ext.E() * x);
    return r;
}

}  // namespace govgap
