#pragma once

// One-at-a-time generalizations of the baseline model:
//   γ  damage exposure a(θ) = θ^γ
//   β  breach probability α^β/(α^β + d)
//   η  productivity θ^η·α
//   ω  readiness spillover L = λα(θ + ωμ)
// and the endogenous governance-investment problem max_I V(λ₀−I) − kI²/2.

#include <string>
#include <vector>

#include "govgap/model.hpp"

namespace govgap::ext {

struct ExtensionConfig {
    double gamma = 1.0;
    double beta = 1.0;
    double eta = 1.0;
    double omega = 0.0;

    /// Throws DomainError on out-of-range values or when more than one
    /// component deviates from the baseline.
    void validate() const;
    bool is_baseline() const noexcept;
    /// "baseline", "gamma", "beta", "eta" or "omega".
    std::string active() const;

    friend bool operator==(const ExtensionConfig&, const ExtensionConfig&) = default;
};

/// Closed-form optimum of a generalized model plus its sign-reversal test.
struct ExtendedDeployment {
    double alpha = 0.0;
    Regime regime = Regime::Corner;
    bool clamped = false;
    /// The regime-appropriate condition for ∂α*/∂θ < 0 holds.
    bool reversal = false;
};

ExtendedDeployment alpha_star_gamma(const ModelParams& p, double gamma);
ExtendedDeployment alpha_star_eta(const ModelParams& p, double eta);
ExtendedDeployment alpha_star_omega(const ModelParams& p, double omega);

/// Raw profit of the active generalization (baseline when cfg is default).
double extended_profit(double alpha, double d, const ModelParams& p, const ExtensionConfig& cfg);

struct BetaDefense {
    double d = 0.0;
    /// The interior expression α^((β+1)/2)√(λθ) − α^β was negative.
    bool corner = false;
};

/// d*_β(α) = α^((β+1)/2)√(λθ) − α^β, or 0 with the corner flag when infeasible.
BetaDefense beta_defense(double alpha, const ModelParams& p, double beta);

/// p*_β = α^((β−1)/2)/√(λθ), capped at 1.
double beta_equilibrium_prob(double alpha, const ModelParams& p, double beta);

/// Profit with the best-response defense substituted: the interior reduced
/// form where d*_β ≥ 0, the d = 0 corner profit elsewhere.
double beta_concentrated_profit(double alpha, const ModelParams& p, double beta);

/// Derivative of beta_concentrated_profit; equals the first-order condition F
/// where the interior defense is feasible.
double beta_foc(double alpha, const ModelParams& p, double beta);

struct BetaDeployment {
    double alpha = 0.0;
    /// Optimum lies where d*_β = 0.
    bool corner = false;
    /// No stationary point with positive profit; α = 0 returned.
    bool no_positive_root = false;
    /// All local maxima located by the bracket scan.
    std::vector<double> candidates;
};

/// Search bracket [1e-9, θ+μ], 200-point sign scan, bisection to 1e-12,
/// ties among roots broken by concentrated profit. β = 1 returns the
/// closed form.
BetaDeployment beta_optimal_deployment(const ModelParams& p, double beta);

/// The bracket search itself, without the β = 1 shortcut.
BetaDeployment beta_root_search(const ModelParams& p, double beta);

/// (β+1)α^((β−1)/2)√λ / (2√θ) > 1.
bool beta_sign_reversal(double alpha, const ModelParams& p, double beta);

/// Combined view used by the CLI and sweeps.
struct ExtensionSolution {
    std::string variant;
    double alpha = 0.0;
    double d = 0.0;
    double p = 1.0;
    double alpha0 = 0.0;
    double discount = 0.0;
    double value = 0.0;
    Regime regime = Regime::Corner;
    bool clamped = false;
    bool reversal = false;
};

ExtensionSolution solve_extension(const ModelParams& p, const ExtensionConfig& cfg);

// --- endogenous governance -------------------------------------------------

inline constexpr double kLambdaFloor = 1e-6;

/// −V′(λ) = α*(λ)√(θ/λ) (λθ > 1) or θ·α*(λ) (λθ ≤ 1).
double governance_marginal_value(double lambda, double theta, double mu);

struct GovernanceProblem {
    double lambda0 = 0.0;
    double k = 0.0;
    double I_star = 0.0;
    double lambda_star = 0.0;
    /// λ* hit the floor kLambdaFloor.
    bool capped = false;
    /// λ* sits exactly on λθ = 1, where the one-sided marginal values agree.
    bool at_kink = false;
    double welfare = 0.0;  // W(I*)
    std::vector<double> roots;
};

/// W(I) = V(λ₀ − I) − kI²/2.
double governance_welfare(double I, double lambda0, double k, double theta, double mu);

/// kI − (−V′(λ₀ − I)).
double governance_residual(double I, double lambda0, double k, double theta, double mu);

/// Throws DomainError for λ₀ ≤ 0, k ≤ 0 or λ₀ ≥ μ + 1.
GovernanceProblem solve_governance(double lambda0, double k, double theta, double mu);

}  // namespace govgap::ext
