#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "govgap/model.hpp"
#include "govgap/oracle.hpp"

namespace govgap::harness {

/// Fixed seed for the randomized verification sets; the model itself is
/// deterministic and never reads GOVGAP_SEED.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

inline constexpr double kOracleAlphaTol = 1e-4;
inline constexpr double kOracleProfitTol = 1e-8;
inline constexpr double kBetaAlphaTol = 1e-3;

/// θ ∈ [0.1, 5], μ ∈ [0.5, 5], λ ∈ [0.1, min(3, μ+1−0.01)]: always λ < μ + 1.
ModelParams sample_valid_params(std::mt19937_64& rng);
std::vector<ModelParams> sample_valid_set(int n, std::uint64_t seed);

struct OracleCheck {
    ModelParams params = ModelParams::make(1.0, 1.0, 1.0);
    double alpha_closed = 0.0;
    double alpha_hat = 0.0;
    double d_closed = 0.0;
    double d_hat = 0.0;
    double profit_closed = 0.0;
    double value_hat = 0.0;
    double alpha_error = 0.0;
    /// |profit at the closed form − best grid value|.
    double profit_gap = 0.0;
    bool ok = false;
};

/// Closed-form (α*, d*) against the 2-D grid maximizer of the raw profit.
OracleCheck check_baseline_point(const ModelParams& p, oracle::Execution exec);
std::vector<OracleCheck> verify_baseline(const std::vector<ModelParams>& points, oracle::Execution exec);

/// β-root search against the 2-D grid maximizer of the β profit.
OracleCheck check_beta_point(const ModelParams& p, double beta, oracle::Execution exec);
std::vector<OracleCheck> verify_beta(const std::vector<ModelParams>& points, double beta,
                                     oracle::Execution exec);

}  // namespace govgap::harness
