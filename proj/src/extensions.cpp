#include "govgap/extensions.hpp"

#include <cmath>
#include <sstream>

#include "govgap/error.hpp"
#include "govgap/oracle.hpp"

namespace govgap::ext {

namespace {

constexpr double kBetaScanLo = 1e-9;
constexpr int kBetaScanPoints = 200;
constexpr double kBetaTol = 1e-12;
constexpr int kGovScanPoints = 400;
constexpr double kGovTol = 1e-13;

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

void require_beta(double beta) {
    if (!std::isfinite(beta) || beta < 1.0) throw DomainError("beta must be finite and >= 1");
}

ExtendedDeployment from_vertex(double vertex, double x) {
    ExtendedDeployment r;
    r.regime = regime_for_exposure(x);
    r.clamped = vertex <= 0.0;
    r.alpha = r.clamped ? 0.0 : vertex;
    return r;
}

// d and p under the baseline contest at composite exposure x.
void baseline_defense(double alpha, double x, double& d, double& p) {
    if (regime_for_exposure(x) == Regime::Corner) {
        d = 0.0;
        p = 1.0;
    } else {
        d = alpha * (std::sqrt(x) - 1.0);
        p = 1.0 / std::sqrt(x);
    }
}

}  // namespace

void ExtensionConfig::validate() const {
    require_finite(gamma, "gamma");
    require_finite(eta, "eta");
    require_finite(omega, "omega");
    if (gamma < 0.0) throw DomainError("gamma must be >= 0");
    require_beta(beta);
    if (!(eta > 0.0)) throw DomainError("eta must be > 0");
    if (omega < 0.0 || omega > 1.0) throw DomainError("omega must lie in [0, 1]");
    const int deviations = (gamma != 1.0) + (beta != 1.0) + (eta != 1.0) + (omega != 0.0);
    if (deviations > 1)
        throw DomainError("combined extensions are not modeled; vary one of gamma/beta/eta/omega at a time");
}

bool ExtensionConfig::is_baseline() const noexcept {
    return gamma == 1.0 && beta == 1.0 && eta == 1.0 && omega == 0.0;
}

std::string ExtensionConfig::active() const {
    if (gamma != 1.0) return "gamma";
    if (beta != 1.0) return "beta";
    if (eta != 1.0) return "eta";
    if (omega != 0.0) return "omega";
    return "baseline";
}

ExtendedDeployment alpha_star_gamma(const ModelParams& p, double gamma) {
    require_finite(gamma, "gamma");
    if (gamma < 0.0) throw DomainError("gamma must be >= 0");
    const double theta = p.theta();
    const double lambda = p.lambda();
    const double x = lambda * std::pow(theta, gamma);
    const double vertex = regime_for_exposure(x) == Regime::Corner
                              ? p.mu() + theta - x
                              : theta + p.mu() + 1.0 - 2.0 * std::sqrt(x);
    ExtendedDeployment r = from_vertex(vertex, x);
    if (r.regime == Regime::Corner)
        r.reversal = lambda * gamma * std::pow(theta, gamma - 1.0) > 1.0;
    else
        r.reversal = gamma * std::sqrt(lambda) * std::pow(theta, gamma / 2.0 - 1.0) > 1.0;
    return r;
}

ExtendedDeployment alpha_star_eta(const ModelParams& p, double eta) {
    require_finite(eta, "eta");
    if (!(eta > 0.0)) throw DomainError("eta must be > 0");
    const double theta = p.theta();
    const double productivity = std::pow(theta, eta);
    const double x = p.exposure();
    const double vertex = regime_for_exposure(x) == Regime::Corner
                              ? p.mu() + productivity - x
                              : productivity + p.mu() + 1.0 - 2.0 * std::sqrt(x);
    ExtendedDeployment r = from_vertex(vertex, x);
    if (r.regime == Regime::Corner)
        r.reversal = eta * std::pow(theta, eta - 1.0) < p.lambda();
    else
        r.reversal = eta * std::pow(theta, eta - 0.5) < std::sqrt(p.lambda());
    return r;
}

ExtendedDeployment alpha_star_omega(const ModelParams& p, double omega) {
    require_finite(omega, "omega");
    if (omega < 0.0 || omega > 1.0) throw DomainError("omega must lie in [0, 1]");
    const double reach = p.theta() + omega * p.mu();
    const double x = p.lambda() * reach;
    const double vertex = regime_for_exposure(x) == Regime::Corner
                              ? p.mu() + p.theta() - x
                              : p.theta() + p.mu() + 1.0 - 2.0 * std::sqrt(x);
    ExtendedDeployment r = from_vertex(vertex, x);
    r.reversal = r.regime == Regime::Corner ? p.lambda() > 1.0 : reach < p.lambda();
    return r;
}

double extended_profit(double alpha, double d, const ModelParams& p, const ExtensionConfig& cfg) {
    const double theta = p.theta();
    const double gross = (std::pow(theta, cfg.eta) + p.mu()) * alpha - 0.5 * alpha * alpha;
    if (alpha <= 0.0) return gross - d;
    const double surface = std::pow(alpha, cfg.beta);
    const double prob = surface / (surface + d);
    const double damage = p.lambda() * alpha * (std::pow(theta, cfg.gamma) + cfg.omega * p.mu());
    return gross - prob * damage - d;
}

BetaDefense beta_defense(double alpha, const ModelParams& p, double beta) {
    if (!(alpha > 0.0)) throw DomainError("beta_defense: alpha must be > 0");
    require_beta(beta);
    const double d = std::pow(alpha, (beta + 1.0) / 2.0) * std::sqrt(p.exposure()) - std::pow(alpha, beta);
    if (d < 0.0) return {0.0, true};
    return {d, false};
}

double beta_equilibrium_prob(double alpha, const ModelParams& p, double beta) {
    if (!(alpha > 0.0)) throw DomainError("beta_equilibrium_prob: alpha must be > 0");
    require_beta(beta);
    const double prob = std::pow(alpha, (beta - 1.0) / 2.0) / std::sqrt(p.exposure());
    return prob < 1.0 ? prob : 1.0;
}

namespace {

// α^((1−β)/2)√(λθ) ≥ 1: the interior defense is non-negative.
bool beta_feasible(double alpha, const ModelParams& p, double beta) {
    return std::pow(alpha, (1.0 - beta) / 2.0) * std::sqrt(p.exposure()) >= 1.0;
}

}  // namespace

double beta_concentrated_profit(double alpha, const ModelParams& p, double beta) {
    require_beta(beta);
    const double theta = p.theta();
    const double base = (theta + p.mu()) * alpha - 0.5 * alpha * alpha;
    if (alpha <= 0.0) return 0.0;
    if (!beta_feasible(alpha, p, beta)) return base - p.exposure() * alpha;
    return base - 2.0 * std::pow(alpha, (beta + 1.0) / 2.0) * std::sqrt(p.exposure()) +
           std::pow(alpha, beta);
}

double beta_foc(double alpha, const ModelParams& p, double beta) {
    require_beta(beta);
    const double theta = p.theta();
    if (!beta_feasible(alpha, p, beta)) return theta + p.mu() - p.exposure() - alpha;
    return theta + p.mu() - alpha -
           (beta + 1.0) * std::pow(alpha, (beta - 1.0) / 2.0) * std::sqrt(p.exposure()) +
           beta * std::pow(alpha, beta - 1.0);
}

BetaDeployment beta_root_search(const ModelParams& p, double beta) {
    require_beta(beta);
    const double lo = kBetaScanLo;
    const double hi = p.theta() + p.mu();
    auto foc = [&](double a) { return beta_foc(a, p, beta); };

    BetaDeployment out;
    const double step = (hi - lo) / (kBetaScanPoints - 1);
    double prev_x = lo;
    double prev_f = foc(lo);
    for (int i = 1; i < kBetaScanPoints; ++i) {
        const double x = i == kBetaScanPoints - 1 ? hi : lo + step * i;
        const double f = foc(x);
        // + → − crossings of the derivative are local maxima of the profit.
        if (prev_f > 0.0 && f <= 0.0) out.candidates.push_back(oracle::bisect(foc, prev_x, x, kBetaTol));
        prev_x = x;
        prev_f = f;
    }
    if (prev_f > 0.0) out.candidates.push_back(hi);

    double best_value = 0.0;
    for (double c : out.candidates) {
        const double v = beta_concentrated_profit(c, p, beta);
        if (v > best_value) {
            best_value = v;
            out.alpha = c;
        }
    }
    out.no_positive_root = out.alpha == 0.0;
    out.corner = out.alpha > 0.0 && !beta_feasible(out.alpha, p, beta);
    return out;
}

BetaDeployment beta_optimal_deployment(const ModelParams& p, double beta) {
    require_beta(beta);
    if (beta != 1.0) return beta_root_search(p, beta);
    BetaDeployment out;
    const double vertex = deployment_vertex(p);
    out.alpha = vertex > 0.0 ? vertex : 0.0;
    out.no_positive_root = vertex <= 0.0;
    out.corner = out.alpha > 0.0 && classify_regime(p) == Regime::Corner;
    if (out.alpha > 0.0) out.candidates.push_back(out.alpha);
    return out;
}

bool beta_sign_reversal(double alpha, const ModelParams& p, double beta) {
    require_beta(beta);
    return (beta + 1.0) * std::pow(alpha, (beta - 1.0) / 2.0) * std::sqrt(p.lambda()) /
               (2.0 * std::sqrt(p.theta())) >
           1.0;
}

ExtensionSolution solve_extension(const ModelParams& p, const ExtensionConfig& cfg) {
    cfg.validate();
    ExtensionSolution s;
    s.variant = cfg.active();
    s.alpha0 = p.theta() + p.mu();

    if (s.variant == "baseline") {
        const FirmSolution f = solve(p);
        s.alpha = f.alpha_star;
        s.d = f.d_star;
        s.p = f.p_star;
        s.value = f.firm_value;
        s.regime = f.regime;
        s.clamped = f.clamped;
        s.reversal = deployment_slope(p) < 0.0;
    } else if (s.variant == "beta") {
        const BetaDeployment b = beta_optimal_deployment(p, cfg.beta);
        s.alpha = b.alpha;
        s.clamped = b.no_positive_root;
        s.regime = b.corner ? Regime::Corner : Regime::Interior;
        if (b.alpha > 0.0) {
            const BetaDefense d = beta_defense(b.alpha, p, cfg.beta);
            s.d = d.d;
            s.p = d.corner ? 1.0 : beta_equilibrium_prob(b.alpha, p, cfg.beta);
            s.reversal = d.corner ? p.lambda() > 1.0 : beta_sign_reversal(b.alpha, p, cfg.beta);
        }
        s.value = beta_concentrated_profit(s.alpha, p, cfg.beta);
    } else {
        ExtendedDeployment e;
        double x = p.exposure();
        if (s.variant == "gamma") {
            e = alpha_star_gamma(p, cfg.gamma);
            x = p.lambda() * std::pow(p.theta(), cfg.gamma);
        } else if (s.variant == "eta") {
            e = alpha_star_eta(p, cfg.eta);
            s.alpha0 = std::pow(p.theta(), cfg.eta) + p.mu();
        } else {
            e = alpha_star_omega(p, cfg.omega);
            x = p.lambda() * (p.theta() + cfg.omega * p.mu());
        }
        s.alpha = e.alpha;
        s.regime = e.regime;
        s.clamped = e.clamped;
        s.reversal = e.reversal;
        baseline_defense(s.alpha, x, s.d, s.p);
        s.value = 0.5 * s.alpha * s.alpha;
    }
    s.discount = s.alpha0 - s.alpha;
    return s;
}

double governance_marginal_value(double lambda, double theta, double mu) {
    const ModelParams p = ModelParams::make(theta, mu, lambda);
    const double alpha = optimal_deployment(p);
    if (classify_regime(p) == Regime::Corner) return theta * alpha;
    return alpha * std::sqrt(theta / lambda);
}

double governance_welfare(double I, double lambda0, double k, double theta, double mu) {
    const double alpha = optimal_deployment(ModelParams::make(theta, mu, lambda0 - I));
    return 0.5 * alpha * alpha - 0.5 * k * I * I;
}

double governance_residual(double I, double lambda0, double k, double theta, double mu) {
    return k * I - governance_marginal_value(lambda0 - I, theta, mu);
}

GovernanceProblem solve_governance(double lambda0, double k, double theta, double mu) {
    require_finite(lambda0, "lambda0");
    require_finite(k, "k");
    if (!(k > 0.0)) throw DomainError("governance: k must be > 0");
    if (!(lambda0 > kLambdaFloor)) throw DomainError("governance: lambda0 must exceed the floor 1e-6");
    const ModelParams inherited = ModelParams::make(theta, mu, lambda0);
    if (!inherited.positive_deployment_ok()) {
        std::ostringstream os;
        os << "governance: lambda0=" << lambda0 << " violates lambda0 < mu+1 (mu=" << mu << ")";
        throw DomainError(os.str());
    }

    GovernanceProblem g;
    g.lambda0 = lambda0;
    g.k = k;
    const double cap = lambda0 - kLambdaFloor;
    auto residual = [&](double I) { return governance_residual(I, lambda0, k, theta, mu); };
    auto welfare = [&](double I) { return governance_welfare(I, lambda0, k, theta, mu); };

    // W′(I) = −residual(I); − → + crossings of the residual are local maxima of W.
    std::vector<double> candidates;
    double prev_x = 0.0;
    double prev_r = residual(0.0);
    const double step = cap / kGovScanPoints;
    for (int i = 1; i <= kGovScanPoints; ++i) {
        const double x = i == kGovScanPoints ? cap : step * i;
        const double r = residual(x);
        if (prev_r < 0.0 && r >= 0.0) {
            const double root = oracle::bisect(residual, prev_x, x, kGovTol);
            g.roots.push_back(root);
            candidates.push_back(root);
        }
        prev_x = x;
        prev_r = r;
    }
    const bool rising_at_cap = prev_r < 0.0;
    if (rising_at_cap) candidates.push_back(cap);
    if (candidates.empty()) {
        std::ostringstream os;
        os << "governance: no stationary point or cap candidate on [0, " << cap
           << "] (residual at 0 = " << residual(0.0) << ", at cap = " << prev_r << ")";
        throw ConvergenceError(os.str());
    }

    g.I_star = candidates.front();
    g.welfare = welfare(g.I_star);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const double w = welfare(candidates[i]);
        if (w > g.welfare) {
            g.welfare = w;
            g.I_star = candidates[i];
        }
    }
    g.capped = rising_at_cap && g.I_star == cap;
    // λ₀ − (λ₀ − ε) can round below ε; report the floor itself when capped.
    g.lambda_star = g.capped ? kLambdaFloor : lambda0 - g.I_star;
    g.at_kink = std::abs(g.lambda_star * theta - 1.0) < 1e-9;
    return g;
}

}  // namespace govgap::ext
