#pragma once

// Discrete legacy-vs-frontier capability choice. Firm value V(θ) = α*(θ)²/2
// is U-shaped in θ when λ > 1, so only the two endpoints need comparing.

#include <optional>

namespace govgap {

struct UpgradeDecision {
    double theta_L = 0.0;
    double theta_F = 0.0;
    double V_L = 0.0;
    double V_F = 0.0;
    bool adopt = false;
    /// θ̄_F when λθ_L > 1; empty means the threshold form does not apply and
    /// the endpoint values were compared directly.
    std::optional<double> frontier_threshold;
    /// Rejection although the frontier is past the turning point θ = λ.
    bool trap = false;
};

/// α*(θ_c)²/2. Throws DomainError if θ_c ≤ 0 or λ ≥ μ + 1.
double firm_value_at(double theta_c, double mu, double lambda);

/// Throws DomainError if θ_F ≤ θ_L, either is non-positive, or λ ≥ μ + 1.
UpgradeDecision upgrade_decision(double theta_L, double theta_F, double mu, double lambda);

/// max{θ_L, [max{0, 2√λ − √θ_L}]²} for an interior-regime legacy system;
/// std::nullopt when λθ_L ≤ 1.
std::optional<double> frontier_threshold(double theta_L, double lambda);

}  // namespace govgap
