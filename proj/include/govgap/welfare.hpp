#pragma once

// Social optima under a breach externality e: total social damage is
// (1+e)·p·L. The first-best planner picks (α, d); the second-best regulator
// picks α and the firm still best-responds with d*(α).

#include "govgap/model.hpp"

namespace govgap {

class Externality {
public:
    /// Throws DomainError unless e is finite and ≥ 0.
    explicit Externality(double e);

    double e() const noexcept { return e_; }
    double E() const noexcept { return 1.0 + e_; }
    /// x = λθ at a parameter point.
    static double composite(const ModelParams& p) noexcept { return p.exposure(); }

private:
    double e_;
};

struct ParadoxThresholds {
    double private_threshold = 0.0;  // λ
    double fb_threshold = 0.0;       // (1+e)λ
    double sb_threshold = 0.0;       // ((2+e)/2)²λ
    bool private_corner = false;     // λ > 1
    bool social_corner = false;      // (1+e)λ > 1
};

struct WelfareAssessment {
    double alpha_private = 0.0;
    double alpha_fb = 0.0;
    double alpha_sb = 0.0;
    bool fb_clamped = false;
    bool sb_clamped = false;

    double private_threshold = 0.0;
    double fb_threshold = 0.0;
    double sb_threshold = 0.0;

    // ∂α/∂θ < 0 at the evaluated θ under each benchmark's own regime split.
    bool in_private_paradox = false;
    bool in_fb_paradox = false;
    bool in_sb_paradox = false;

    // Whether any θ > 0 lies in the respective paradox region.
    bool admits_private_paradox = false;
    bool admits_fb_paradox = false;
    bool admits_sb_paradox = false;

    // Welfare levels (model-derived; the maximizers are what get reported).
    double welfare_fb = 0.0;        // W at (α_FB, d_FB)
    double welfare_sb = 0.0;        // W_SB(α_SB)
    double welfare_at_private = 0.0;  // W_SB(α*): social welfare under private behavior
};

/// Unclamped first-best vertex; regime split at (1+e)λθ = 1.
double first_best_vertex(const ModelParams& p, const Externality& ext) noexcept;
double first_best_deployment(const ModelParams& p, const Externality& ext) noexcept;

/// Unclamped second-best vertex; regime split at λθ = 1 regardless of e.
double second_best_vertex(const ModelParams& p, const Externality& ext) noexcept;
double second_best_deployment(const ModelParams& p, const Externality& ext) noexcept;

/// Planner objective π(α,d) − e·p(α,d)·L(α,θ).
double social_welfare(double alpha, double d, const ModelParams& p, const Externality& ext);

/// W_SB(α) = π(α, d*(α)) − e·p(α,d*)·L, closed form per regime.
double sb_welfare_objective(double alpha, const ModelParams& p, const Externality& ext);

ParadoxThresholds paradox_thresholds(double lambda, const Externality& ext);

WelfareAssessment assess_welfare(const ModelParams& p, const Externality& ext);

struct DiscountValues {
    double h_x = 0.0;   // H(x)
    double s_x = 0.0;   // S_e(x)
    double h_ex = 0.0;  // H(Ex)
};

/// H(x) = x (x ≤ 1) or 2√x − 1; S_e(x) = Ex (x ≤ 1) or (2+e)√x − 1.
DiscountValues discount_functions(double x, const Externality& ext);

}  // namespace govgap
