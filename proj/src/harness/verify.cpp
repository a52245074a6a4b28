#include "govgap/harness/verify.hpp"

#include <algorithm>
#include <cmath>

#include "govgap/extensions.hpp"

namespace govgap::harness {

ModelParams sample_valid_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> theta(0.1, 5.0);
    std::uniform_real_distribution<double> mu(0.5, 5.0);
    const double t = theta(rng);
    const double m = mu(rng);
    std::uniform_real_distribution<double> lambda(0.1, std::min(3.0, m + 1.0 - 0.01));
    return ModelParams::make(t, m, lambda(rng));
}

std::vector<ModelParams> sample_valid_set(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ModelParams> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(sample_valid_params(rng));
    return out;
}

OracleCheck check_baseline_point(const ModelParams& p, oracle::Execution exec) {
    OracleCheck c;
    c.params = p;
    const FirmSolution s = solve(p);
    c.alpha_closed = s.alpha_star;
    c.d_closed = s.d_star;
    c.profit_closed = profit(s.alpha_star, s.d_star, p);

    const auto objective = [&p](double a, double d) { return profit(a, d, p); };
    const oracle::OracleResult r = oracle::maximize_profit(objective, oracle::GridSpec::for_params(p), exec);
    c.alpha_hat = r.alpha_hat;
    c.d_hat = r.d_hat;
    c.value_hat = r.value_hat;
    c.alpha_error = std::abs(c.alpha_hat - c.alpha_closed);
    c.profit_gap = std::abs(c.profit_closed - c.value_hat);
    c.ok = c.alpha_error <= kOracleAlphaTol && c.profit_gap <= kOracleProfitTol;
    return c;
}

std::vector<OracleCheck> verify_baseline(const std::vector<ModelParams>& points, oracle::Execution exec) {
    std::vector<OracleCheck> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(check_baseline_point(p, exec));
    return out;
}

OracleCheck check_beta_point(const ModelParams& p, double beta, oracle::Execution exec) {
    OracleCheck c;
    c.params = p;
    ext::ExtensionConfig cfg;
    cfg.beta = beta;
    const ext::BetaDeployment b = ext::beta_optimal_deployment(p, beta);
    c.alpha_closed = b.alpha;
    c.d_closed = b.alpha > 0.0 ? ext::beta_defense(b.alpha, p, beta).d : 0.0;
    c.profit_closed = ext::extended_profit(c.alpha_closed, c.d_closed, p, cfg);

    const auto objective = [&](double a, double d) { return ext::extended_profit(a, d, p, cfg); };
    const oracle::OracleResult r = oracle::maximize_profit(objective, oracle::GridSpec::for_params(p), exec);
    c.alpha_hat = r.alpha_hat;
    c.d_hat = r.d_hat;
    c.value_hat = r.value_hat;
    c.alpha_error = std::abs(c.alpha_hat - c.alpha_closed);
    c.profit_gap = std::abs(c.profit_closed - c.value_hat);
    c.ok = c.alpha_error <= kBetaAlphaTol;
    return c;
}

std::vector<OracleCheck> verify_beta(const std::vector<ModelParams>& points, double beta,
                                     oracle::Execution exec) {
    std::vector<OracleCheck> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(check_beta_point(p, beta, exec));
    return out;
}

}  // namespace govgap::harness
