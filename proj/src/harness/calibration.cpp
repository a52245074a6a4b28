#include "govgap/harness/calibration.hpp"

namespace govgap::harness {

const std::vector<IndustryCalibration>& builtin_calibration() {
    static const std::vector<IndustryCalibration> table = {
        {"Retail", 3.48, 0.71, 0.3},
        {"Industrial", 5.56, 1.14, 0.5},
        {"Financial Services", 6.08, 1.25, 1.0},
        {"Healthcare", 9.77, 2.00, 1.5},
    };
    return table;
}

double lambda_from_cost(double breach_cost_musd) { return breach_cost_musd / kReferenceBreachCostMusd; }

}  // namespace govgap::harness
