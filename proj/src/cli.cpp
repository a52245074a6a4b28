#include "govgap/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "govgap/capability.hpp"
#include "govgap/error.hpp"
#include "govgap/extensions.hpp"
#include "govgap/harness/emit.hpp"
#include "govgap/harness/sweep.hpp"
#include "govgap/harness/tables.hpp"
#include "govgap/harness/verify.hpp"
#include "govgap/model.hpp"
#include "govgap/welfare.hpp"

namespace govgap::cli {

namespace {

using harness::Cell;
using harness::Table;

// Numeric flags shared across subcommands; the JSON config file uses the
// same names with '-' written as '_'.
class ParamSet {
public:
    ParamSet(CLI::App* app, std::initializer_list<std::pair<const char*, const char*>> keys) {
        for (const auto& [key, help] : keys) {
            auto& slot = values_[key];
            options_[key] = app->add_option(std::string("--") + key, slot, help);
        }
    }

    void merge_config(const std::string& path) {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read config file '" + path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
        }
        if (!j.is_object()) throw UsageError("config file '" + path + "' must hold a JSON object");
        for (auto& [key, opt] : options_) {
            if (opt->count() > 0) continue;
            std::string alt = key;
            for (char& c : alt)
                if (c == '-') c = '_';
            for (const std::string& name : {key, alt}) {
                if (!j.contains(name)) continue;
                if (!j[name].is_number())
                    throw UsageError("config key '" + name + "' must be a number");
                values_[key] = j[name].get<double>();
                from_config_.insert(key);
            }
        }
    }

    bool has(const std::string& key) const {
        return options_.at(key)->count() > 0 || from_config_.count(key) > 0;
    }

    double get(const std::string& key) const {
        if (!has(key)) throw UsageError("missing required --" + key);
        return values_.at(key);
    }

    double get_or(const std::string& key, double fallback) const {
        return has(key) ? values_.at(key) : fallback;
    }

    std::optional<double> maybe(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        return values_.at(key);
    }

private:
    std::map<std::string, double> values_;
    std::map<std::string, CLI::Option*> options_;
    std::set<std::string> from_config_;
};

struct OutputOptions {
    std::string format = "csv";
    std::string path;
};

void add_output(CLI::App* sub, OutputOptions& o) {
    sub->add_option("--format", o.format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--out", o.path, "write to PATH instead of stdout");
}

void emit(const Table& t, const OutputOptions& o, std::ostream& out,
          const harness::ChartSpec* chart = nullptr) {
    const std::string text = harness::render(t, harness::parse_format(o.format), chart);
    if (o.path.empty())
        out << text;
    else
        harness::write_file(o.path, text);
}

ModelParams base_params(const ParamSet& ps, bool allow_clamp) {
    return ModelParams::make(ps.get("theta"), ps.get("mu"), ps.get("lambda"),
                             allow_clamp ? Assumption::Relaxed : Assumption::Strict);
}

ext::ExtensionConfig extension_config(const ParamSet& ps) {
    ext::ExtensionConfig c;
    c.gamma = ps.get_or("gamma", 1.0);
    c.beta = ps.get_or("beta", 1.0);
    c.eta = ps.get_or("eta", 1.0);
    c.omega = ps.get_or("omega", 0.0);
    c.validate();
    return c;
}

Table one_row(std::string command, std::vector<std::pair<std::string, Cell>> params,
              std::vector<std::pair<std::string, Cell>> fields) {
    Table t;
    t.command = std::move(command);
    t.params = std::move(params);
    std::vector<Cell> row;
    for (auto& [name, value] : fields) {
        t.columns.push_back(name);
        row.push_back(std::move(value));
    }
    t.rows.push_back(std::move(row));
    return t;
}

std::vector<std::pair<std::string, Cell>> params_of(const ModelParams& p) {
    return {{"theta", p.theta()}, {"mu", p.mu()}, {"lambda", p.lambda()}};
}

Table solve_table(const ModelParams& p) {
    const FirmSolution s = solve(p);
    return one_row("solve", params_of(p),
                   {{"regime", std::string(to_string(s.regime))},
                    {"alpha_star", s.alpha_star},
                    {"d_star", s.d_star},
                    {"p_star", s.p_star},
                    {"expected_loss", s.expected_loss},
                    {"profit", s.profit},
                    {"alpha0", s.alpha0},
                    {"discount", s.discount},
                    {"discount_share", s.discount / s.alpha0},
                    {"firm_value", s.firm_value},
                    {"deployment_slope", deployment_slope(p)},
                    {"lambda_slope", lambda_slope(p)},
                    {"paradox", deployment_slope(p) < 0.0},
                    {"clamped", s.clamped}});
}

Table welfare_table(const ModelParams& p, double e) {
    const WelfareAssessment w = assess_welfare(p, Externality(e));
    auto params = params_of(p);
    params.emplace_back("e", e);
    return one_row("welfare", params,
                   {{"alpha_private", w.alpha_private},
                    {"alpha_fb_derived", w.alpha_fb},
                    {"alpha_sb", w.alpha_sb},
                    {"fb_clamped", w.fb_clamped},
                    {"sb_clamped", w.sb_clamped},
                    {"private_threshold", w.private_threshold},
                    {"fb_threshold", w.fb_threshold},
                    {"sb_threshold", w.sb_threshold},
                    {"in_private_paradox", w.in_private_paradox},
                    {"in_fb_paradox", w.in_fb_paradox},
                    {"in_sb_paradox", w.in_sb_paradox},
                    {"admits_private_paradox", w.admits_private_paradox},
                    {"admits_social_paradox", w.admits_sb_paradox},
                    {"welfare_fb_derived", w.welfare_fb},
                    {"welfare_sb_derived", w.welfare_sb},
                    {"welfare_at_private_derived", w.welfare_at_private}});
}

Table upgrade_table(double theta_l, double theta_f, double mu, double lambda) {
    const UpgradeDecision u = upgrade_decision(theta_l, theta_f, mu, lambda);
    return one_row("upgrade",
                   {{"theta_L", theta_l}, {"theta_F", theta_f}, {"mu", mu}, {"lambda", lambda}},
                   {{"V_legacy", u.V_L},
                    {"V_frontier", u.V_F},
                    {"upgrade", u.adopt},
                    {"trap", u.trap},
                    {"threshold_applies", u.frontier_threshold.has_value()},
                    {"frontier_threshold", u.frontier_threshold ? Cell(*u.frontier_threshold)
                                                                : Cell(std::string("not_applicable"))}});
}

Table ext_table(const ModelParams& p, const ext::ExtensionConfig& cfg) {
    const ext::ExtensionSolution s = ext::solve_extension(p, cfg);
    auto params = params_of(p);
    params.insert(params.end(), {{"gamma", cfg.gamma}, {"beta", cfg.beta}, {"eta", cfg.eta}, {"omega", cfg.omega}});
    return one_row("ext", params,
                   {{"variant", s.variant},
                    {"regime", std::string(to_string(s.regime))},
                    {"alpha", s.alpha},
                    {"d", s.d},
                    {"p", s.p},
                    {"alpha0", s.alpha0},
                    {"discount", s.discount},
                    {"value", s.value},
                    {"clamped", s.clamped},
                    {"reversal", s.reversal}});
}

Table governance_table(double lambda0, double k, double theta, double mu) {
    const ext::GovernanceProblem g = ext::solve_governance(lambda0, k, theta, mu);
    const double boundary = std::max(1.0, theta);
    return one_row("governance", {{"lambda0", lambda0}, {"k", k}, {"theta", theta}, {"mu", mu}},
                   {{"I_star", g.I_star},
                    {"lambda_star", g.lambda_star},
                    {"welfare", g.welfare},
                    {"marginal_value", ext::governance_marginal_value(g.lambda_star, theta, mu)},
                    {"capped", g.capped},
                    {"at_kink", g.at_kink},
                    {"residual_paradox", g.lambda_star > boundary}});
}

struct VerifyOptions {
    int points = 500;
    int beta_points = 50;
    std::uint64_t seed = harness::kDefaultSeed;
    std::string what = "all";
};

int run_verify(const VerifyOptions& v, const OutputOptions& o, std::ostream& out, std::ostream& err) {
    if (v.points < 0 || v.beta_points < 0) throw UsageError("point counts must be >= 0");
    Table t;
    t.command = "verify";
    t.params = {{"points", static_cast<double>(v.points)},
                {"beta_points", static_cast<double>(v.beta_points)},
                {"seed", static_cast<double>(v.seed)}};
    t.columns = {"check", "case", "expected", "computed", "error", "ok"};
    int failures = 0;
    auto record = [&](std::string check, std::string label, Cell expected, Cell computed, double error,
                      bool ok) {
        failures += ok ? 0 : 1;
        t.rows.push_back({std::move(check), std::move(label), std::move(expected), std::move(computed), error, ok});
    };

    if (v.what == "all" || v.what == "oracle") {
        const auto base = harness::verify_baseline(harness::sample_valid_set(v.points, v.seed),
                                                   oracle::Execution::Parallel);
        for (std::size_t i = 0; i < base.size(); ++i) {
            const auto& c = base[i];
            record("oracle_baseline", "point " + std::to_string(i), c.alpha_closed, c.alpha_hat,
                   std::max(c.alpha_error, c.profit_gap), c.ok);
        }
        const auto beta_set = harness::sample_valid_set(v.beta_points, v.seed + 1);
        for (double beta : {1.25, 1.5, 2.0}) {
            const auto res = harness::verify_beta(beta_set, beta, oracle::Execution::Parallel);
            for (std::size_t i = 0; i < res.size(); ++i) {
                std::ostringstream label;
                label << "beta=" << beta << " point " << i;
                record("oracle_beta", label.str(), res[i].alpha_closed, res[i].alpha_hat, res[i].alpha_error,
                       res[i].ok);
            }
        }
    }
    if (v.what == "all" || v.what == "tables") {
        for (auto id : {harness::TableId::T3, harness::TableId::T4, harness::TableId::T5, harness::TableId::T6}) {
            for (const auto& g : harness::compare_with_reference(id, harness::reproduce_table(id))) {
                record("table_" + g.table, g.row + " / " + g.column, g.expected, g.computed, g.error, g.ok);
            }
        }
    }
    if (v.what != "all" && v.what != "oracle" && v.what != "tables")
        throw UsageError("--what must be all, oracle or tables");

    emit(t, o, out);
    err << "verify: " << t.rows.size() - static_cast<std::size_t>(failures) << "/" << t.rows.size()
        << " checks passed\n";
    if (failures > 0) {
        for (const auto& row : t.rows) {
            if (!std::get<bool>(row[5]))
                err << "  FAIL " << std::get<std::string>(row[0]) << " " << std::get<std::string>(row[1]) << "\n";
        }
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deployment, defense and welfare under a governance-capability gap", "govgap"};
    app.require_subcommand(1);
    app.set_version_flag("--version", harness::kVersion);

    std::string config;
    OutputOptions output;
    bool allow_clamp = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config, "JSON file with parameter values (flags override)");
        add_output(sub, output);
    };

    auto* solve_cmd = app.add_subcommand("solve", "private optimum at one parameter point");
    ParamSet solve_ps(solve_cmd, {{"theta", "AI capability"}, {"mu", "organizational readiness"},
                                  {"lambda", "breach-loss magnitude"}});
    solve_cmd->add_flag("--allow-clamp", allow_clamp, "accept lambda >= mu+1 (alpha* clamped at 0)");
    add_common(solve_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "solve along a theta or lambda grid");
    ParamSet sweep_ps(sweep_cmd, {{"theta", "capability (fixed unless swept)"},
                                  {"mu", "organizational readiness"},
                                  {"lambda", "loss magnitude (fixed unless swept)"},
                                  {"e", "breach externality; adds social columns"},
                                  {"gamma", "exposure elasticity"},
                                  {"beta", "attack-surface exponent"},
                                  {"eta", "productivity exponent"},
                                  {"omega", "readiness spillover"},
                                  {"lo", "axis start"},
                                  {"hi", "axis end"}});
    std::string axis_name = "theta";
    int sweep_n = 50;
    sweep_cmd->add_option("--axis", axis_name, "theta or lambda");
    sweep_cmd->add_option("--n", sweep_n, "number of grid points");
    sweep_cmd->add_flag("--allow-clamp", allow_clamp, "accept lambda >= mu+1");
    add_common(sweep_cmd);

    auto* table_cmd = app.add_subcommand("table", "reproduce a calibration table");
    std::string table_id;
    table_cmd->add_option("--id", table_id, "T3, T4, T5 or T6")->required();
    add_output(table_cmd, output);

    auto* welfare_cmd = app.add_subcommand("welfare", "first-best and second-best deployment");
    ParamSet welfare_ps(welfare_cmd, {{"theta", "AI capability"}, {"mu", "organizational readiness"},
                                      {"lambda", "breach-loss magnitude"}, {"e", "breach externality"}});
    add_common(welfare_cmd);

    auto* upgrade_cmd = app.add_subcommand("upgrade", "legacy vs frontier capability choice");
    ParamSet upgrade_ps(upgrade_cmd, {{"theta-l", "legacy capability"}, {"theta-f", "frontier capability"},
                                      {"mu", "organizational readiness"}, {"lambda", "breach-loss magnitude"}});
    add_common(upgrade_cmd);

    auto* ext_cmd = app.add_subcommand("ext", "one-at-a-time model generalizations");
    ParamSet ext_ps(ext_cmd, {{"theta", "AI capability"}, {"mu", "organizational readiness"},
                              {"lambda", "breach-loss magnitude"}, {"gamma", "exposure elasticity"},
                              {"beta", "attack-surface exponent"}, {"eta", "productivity exponent"},
                              {"omega", "readiness spillover"}});
    add_common(ext_cmd);

    auto* gov_cmd = app.add_subcommand("governance", "optimal governance investment");
    ParamSet gov_ps(gov_cmd, {{"lambda0", "inherited loss magnitude"}, {"k", "adjustment friction"},
                              {"theta", "AI capability"}, {"mu", "organizational readiness"}});
    add_common(gov_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "closed forms vs brute force, tables vs reference values");
    VerifyOptions verify_opts;
    verify_cmd->add_option("--points", verify_opts.points, "random baseline points");
    verify_cmd->add_option("--beta-points", verify_opts.beta_points, "random points per beta value");
    verify_cmd->add_option("--seed", verify_opts.seed, "seed for the random point sets");
    verify_cmd->add_option("--what", verify_opts.what, "all, oracle or tables");
    add_output(verify_cmd, output);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << harness::kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) {
            solve_ps.merge_config(config);
            emit(solve_table(base_params(solve_ps, allow_clamp)), output, out);
        } else if (sweep_cmd->parsed()) {
            sweep_ps.merge_config(config);
            const harness::SweepAxis axis = harness::parse_axis(axis_name);
            const harness::SweepRange range{sweep_ps.get("lo"), sweep_ps.get("hi"), sweep_n};
            const double theta = axis == harness::SweepAxis::Theta ? range.lo : sweep_ps.get("theta");
            const double lambda = axis == harness::SweepAxis::Lambda ? range.lo : sweep_ps.get("lambda");
            const ModelParams base = ModelParams::make(theta, sweep_ps.get("mu"), lambda,
                                                       allow_clamp ? Assumption::Relaxed : Assumption::Strict);
            harness::SweepOptions opts;
            opts.config = extension_config(sweep_ps);
            opts.e = sweep_ps.maybe("e");
            const harness::SweepResult r = harness::sweep(axis, range, base, opts);
            const Table t = harness::sweep_table(r);
            harness::ChartSpec chart{"optimal deployment vs " + std::string(to_string(axis)),
                                     std::string(to_string(axis)), {"alpha"}};
            if (r.social()) chart.y_columns = {"alpha", "alpha_fb", "alpha_sb"};
            emit(t, output, out, &chart);
        } else if (table_cmd->parsed()) {
            emit(harness::reproduce_table(harness::parse_table_id(table_id)), output, out);
        } else if (welfare_cmd->parsed()) {
            welfare_ps.merge_config(config);
            emit(welfare_table(base_params(welfare_ps, false), welfare_ps.get("e")), output, out);
        } else if (upgrade_cmd->parsed()) {
            upgrade_ps.merge_config(config);
            emit(upgrade_table(upgrade_ps.get("theta-l"), upgrade_ps.get("theta-f"), upgrade_ps.get("mu"),
                               upgrade_ps.get("lambda")),
                 output, out);
        } else if (ext_cmd->parsed()) {
            ext_ps.merge_config(config);
            emit(ext_table(base_params(ext_ps, false), extension_config(ext_ps)), output, out);
        } else if (gov_cmd->parsed()) {
            gov_ps.merge_config(config);
            emit(governance_table(gov_ps.get("lambda0"), gov_ps.get("k"), gov_ps.get("theta"), gov_ps.get("mu")),
                 output, out);
        } else if (verify_cmd->parsed()) {
            return run_verify(verify_opts, output, out, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace govgap::cli
