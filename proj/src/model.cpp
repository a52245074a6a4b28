#include "govgap/model.hpp"

#include <cmath>
#include <sstream>

#include "govgap/error.hpp"

namespace govgap {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        std::ostringstream os;
        os << name << " must be finite and > 0 (got " << v << ")";
        throw DomainError(os.str());
    }
}

}  // namespace

ModelParams::ModelParams(double theta, double mu, double lambda, Assumption mode)
    : theta_(theta), mu_(mu), lambda_(lambda), positive_ok_(lambda < mu + 1.0), mode_(mode) {}

ModelParams ModelParams::make(double theta, double mu, double lambda, Assumption mode) {
    require_positive(theta, "theta");
    require_positive(mu, "mu");
    require_positive(lambda, "lambda");
    return ModelParams(theta, mu, lambda, mode);
}

ModelParams ModelParams::with_theta(double theta) const { return make(theta, mu_, lambda_, mode_); }
ModelParams ModelParams::with_lambda(double lambda) const { return make(theta_, mu_, lambda, mode_); }
ModelParams ModelParams::with_mu(double mu) const { return make(theta_, mu, lambda_, mode_); }

std::string_view to_string(Regime r) noexcept {
    return r == Regime::Corner ? "corner" : "interior";
}

Regime classify_regime(const ModelParams& p) noexcept { return regime_for_exposure(p.exposure()); }

double breach_probability(double alpha, double d) {
    if (alpha <= 0.0) return 0.0;
    return alpha / (alpha + d);
}

double profit(double alpha, double d, const ModelParams& p) {
    const double gross = (p.theta() + p.mu()) * alpha - 0.5 * alpha * alpha;
    const double loss = breach_probability(alpha, d) * p.lambda() * alpha * p.theta();
    return gross - loss - d;
}

double optimal_defense(double alpha, const ModelParams& p) {
    if (!(alpha > 0.0)) throw DomainError("optimal_defense: alpha must be > 0");
    if (classify_regime(p) == Regime::Corner) return 0.0;
    return alpha * (std::sqrt(p.exposure()) - 1.0);
}

double equilibrium_breach_prob(const ModelParams& p) noexcept {
    if (classify_regime(p) == Regime::Corner) return 1.0;
    return 1.0 / std::sqrt(p.exposure());
}

double deployment_vertex(const ModelParams& p) noexcept {
    if (classify_regime(p) == Regime::Corner) return p.mu() + p.theta() * (1.0 - p.lambda());
    return p.theta() + p.mu() + 1.0 - 2.0 * std::sqrt(p.exposure());
}

double reduced_profit(double alpha, const ModelParams& p) {
    return deployment_vertex(p) * alpha - 0.5 * alpha * alpha;
}

double optimal_deployment(const ModelParams& p) noexcept {
    const double v = deployment_vertex(p);
    return v > 0.0 ? v : 0.0;
}

double security_discount(const ModelParams& p) noexcept {
    const double x = p.exposure();
    if (regime_for_exposure(x) == Regime::Corner) return x;
    return 2.0 * std::sqrt(x) - 1.0;
}

double deployment_slope(const ModelParams& p) noexcept {
    if (classify_regime(p) == Regime::Corner) return 1.0 - p.lambda();
    return 1.0 - std::sqrt(p.lambda() / p.theta());
}

double lambda_slope(const ModelParams& p) noexcept {
    if (classify_regime(p) == Regime::Corner) return -p.theta();
    return -std::sqrt(p.theta() / p.lambda());
}

FirmSolution solve(const ModelParams& p) {
    if (!p.positive_deployment_ok() && !p.relaxed()) {
        std::ostringstream os;
        os << "lambda=" << p.lambda() << " violates lambda < mu+1 (mu=" << p.mu()
           << "); build the params with Assumption::Relaxed to accept a clamped solution";
        throw DomainError(os.str());
    }
    FirmSolution s;
    s.regime = classify_regime(p);
    s.alpha0 = p.theta() + p.mu();
    const double vertex = deployment_vertex(p);
    s.clamped = vertex <= 0.0;
    s.alpha_star = s.clamped ? 0.0 : vertex;
    s.d_star = s.alpha_star > 0.0 ? optimal_defense(s.alpha_star, p) : 0.0;
    s.p_star = equilibrium_breach_prob(p);
    s.expected_loss = s.p_star * p.lambda() * s.alpha_star * p.theta();
    s.profit = reduced_profit(s.alpha_star, p);
    s.discount = s.alpha0 - s.alpha_star;
    s.firm_value = 0.5 * s.alpha_star * s.alpha_star;
    return s;
}

}  // namespace govgap
