#pragma once

#include <string>
#include <vector>

namespace govgap::harness {

/// Global average breach cost that is normalized to λ = 1.
inline constexpr double kReferenceBreachCostMusd = 4.88;

struct IndustryCalibration {
    std::string name;
    double breach_cost_musd = 0.0;
    /// Stored at the two-decimal value used downstream, not the raw ratio.
    double lambda = 0.0;
    double default_e = 0.0;
};

/// Retail, Industrial, Financial Services, Healthcare, in ascending λ.
const std::vector<IndustryCalibration>& builtin_calibration();

/// breach_cost / 4.88 before rounding.
double lambda_from_cost(double breach_cost_musd);

/// Common illustration point for the industry tables.
inline constexpr double kTableTheta = 2.0;
inline constexpr double kTableMu = 2.0;
inline constexpr double kLegacyTheta = 0.5;
inline constexpr double kFrontierTheta = 2.0;

}  // namespace govgap::harness
