#pragma once

// Baseline deployment/defense model: a firm picks AI deployment intensity α and
// AI-specific security spend d against a Tullock breach probability
// p = α/(α+d) and capability-bundled damage L = λαθ.

#include <string_view>

namespace govgap {

/// Whether a parameter point that fails λ < μ+1 may be solved (α* is then
/// clamped at 0 and flagged) or must be rejected.
enum class Assumption { Strict, Relaxed };

class ModelParams {
public:
    /// Throws DomainError unless θ, μ, λ are finite and strictly positive.
    static ModelParams make(double theta, double mu, double lambda,
                            Assumption mode = Assumption::Strict);

    double theta() const noexcept { return theta_; }
    double mu() const noexcept { return mu_; }
    double lambda() const noexcept { return lambda_; }

    /// λ < μ + 1: optimal deployment is strictly positive for every θ > 0.
    bool positive_deployment_ok() const noexcept { return positive_ok_; }
    bool relaxed() const noexcept { return mode_ == Assumption::Relaxed; }

    /// Composite exposure λθ; the regime split sits at 1.
    double exposure() const noexcept { return lambda_ * theta_; }

    ModelParams with_theta(double theta) const;
    ModelParams with_lambda(double lambda) const;
    ModelParams with_mu(double mu) const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    ModelParams(double theta, double mu, double lambda, Assumption mode);

    double theta_;
    double mu_;
    double lambda_;
    bool positive_ok_;
    Assumption mode_;
};

enum class Regime { Corner, Interior };

std::string_view to_string(Regime r) noexcept;

/// Corner iff x ≤ 1, for any composite exposure x (λθ, (1+e)λθ, λθ^γ, ...).
constexpr Regime regime_for_exposure(double x) noexcept {
    return x <= 1.0 ? Regime::Corner : Regime::Interior;
}

struct FirmSolution {
    Regime regime = Regime::Corner;
    double alpha_star = 0.0;
    double d_star = 0.0;
    double p_star = 1.0;
    double expected_loss = 0.0;
    double profit = 0.0;
    double alpha0 = 0.0;
    double discount = 0.0;
    double firm_value = 0.0;
    /// True when the unconstrained optimum was negative and α* was set to 0.
    bool clamped = false;
};

Regime classify_regime(const ModelParams& p) noexcept;

/// Raw profit (θ+μ)α − α²/2 − p(α,d)·λαθ − d, with p(0,d) = 0.
double profit(double alpha, double d, const ModelParams& p);

/// α/(α+d); 0 when α = 0.
double breach_probability(double alpha, double d);

/// Best response d*(α). Throws DomainError for α ≤ 0.
double optimal_defense(double alpha, const ModelParams& p);

/// p* = 1 (corner) or 1/√(λθ) (interior); independent of α.
double equilibrium_breach_prob(const ModelParams& p) noexcept;

/// Profit with d = d*(α) substituted: a concave quadratic in α per regime.
double reduced_profit(double alpha, const ModelParams& p);

/// Unclamped vertex of the reduced-form quadratic. May be negative when
/// λ ≥ μ + 1.
double deployment_vertex(const ModelParams& p) noexcept;

/// max{0, deployment_vertex}.
double optimal_deployment(const ModelParams& p) noexcept;

/// α⁰ − α* before clamping: λθ (corner) or 2√(λθ) − 1 (interior).
double security_discount(const ModelParams& p) noexcept;

/// ∂α*/∂θ. At λθ = 1 both one-sided values equal 1 − λ.
double deployment_slope(const ModelParams& p) noexcept;

/// ∂α*/∂λ; strictly negative.
double lambda_slope(const ModelParams& p) noexcept;

/// Throws DomainError if λ ≥ μ+1 and the params were built Strict.
FirmSolution solve(const ModelParams& p);

}  // namespace govgap
