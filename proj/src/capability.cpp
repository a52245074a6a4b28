#include "govgap/capability.hpp"

#include <algorithm>
#include <cmath>

#include "govgap/error.hpp"
#include "govgap/model.hpp"

namespace govgap {

double firm_value_at(double theta_c, double mu, double lambda) {
    const FirmSolution s = solve(ModelParams::make(theta_c, mu, lambda));
    return s.firm_value;
}

std::optional<double> frontier_threshold(double theta_L, double lambda) {
    if (!(theta_L > 0.0) || !(lambda > 0.0))
        throw DomainError("frontier_threshold: theta_L and lambda must be > 0");
    if (lambda * theta_L <= 1.0) return std::nullopt;
    const double root = std::max(0.0, 2.0 * std::sqrt(lambda) - std::sqrt(theta_L));
    return std::max(theta_L, root * root);
}

UpgradeDecision upgrade_decision(double theta_L, double theta_F, double mu, double lambda) {
    if (!(theta_L > 0.0)) throw DomainError("upgrade_decision: theta_L must be > 0");
    if (!(theta_F > theta_L)) throw DomainError("upgrade_decision: theta_F must exceed theta_L");

    UpgradeDecision u;
    u.theta_L = theta_L;
    u.theta_F = theta_F;
    u.V_L = firm_value_at(theta_L, mu, lambda);
    u.V_F = firm_value_at(theta_F, mu, lambda);
    // Ties keep the legacy system.
    u.adopt = u.V_F > u.V_L;
    u.frontier_threshold = frontier_threshold(theta_L, lambda);
    u.trap = lambda > 1.0 && theta_F > lambda && !u.adopt;
    return u;
}

}  // namespace govgap
