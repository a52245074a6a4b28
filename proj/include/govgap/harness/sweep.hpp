#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "govgap/extensions.hpp"
#include "govgap/harness/table.hpp"
#include "govgap/model.hpp"
#include "govgap/oracle.hpp"

namespace govgap::harness {

enum class SweepAxis { Theta, Lambda };

SweepAxis parse_axis(std::string_view s);
std::string_view to_string(SweepAxis a) noexcept;

struct SweepRange {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

struct SweepOptions {
    ext::ExtensionConfig config;
    /// Adds first-/second-best columns; only with the baseline config.
    std::optional<double> e;
};

struct SweepPoint {
    double x = 0.0;
    double alpha = 0.0;
    double d = 0.0;
    double p = 0.0;
    double discount = 0.0;
    double value = 0.0;
    Regime regime = Regime::Corner;
    bool paradox = false;
    bool clamped = false;
    // Populated when SweepOptions::e is set.
    double alpha_fb = 0.0;
    double alpha_sb = 0.0;
    bool fb_paradox = false;
    bool sb_paradox = false;

    friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::Theta;
    ModelParams base = ModelParams::make(1.0, 1.0, 1.0);
    SweepOptions options;
    std::vector<SweepPoint> points;
    /// Index of the smallest α (first on ties).
    std::size_t min_index = 0;

    bool social() const noexcept { return options.e.has_value(); }
    friend bool operator==(const SweepResult& a, const SweepResult& b) {
        return a.axis == b.axis && a.base == b.base && a.options.config == b.options.config &&
               a.options.e == b.options.e && a.points == b.points && a.min_index == b.min_index;
    }
};

/// Solves every grid point of the axis; the other coordinates come from
/// `base`. Throws UsageError for lo ≥ hi or n < 2.
SweepResult sweep(SweepAxis axis, SweepRange range, const ModelParams& base,
                  const SweepOptions& options = {},
                  oracle::Execution exec = oracle::Execution::Parallel);

Table sweep_table(const SweepResult& r);
SweepResult sweep_from_table(const Table& t);

/// Paradox flags over a (θ, λ) grid; row i is λ_i, column j is θ_j.
struct ParadoxMap {
    std::vector<double> thetas;
    std::vector<double> lambdas;
    std::vector<std::vector<bool>> paradox;
    std::vector<std::vector<double>> alpha;

    friend bool operator==(const ParadoxMap&, const ParadoxMap&) = default;
};

ParadoxMap paradox_map(SweepRange theta, SweepRange lambda, double mu,
                       oracle::Execution exec = oracle::Execution::Parallel);

}  // namespace govgap::harness
