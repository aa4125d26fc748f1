#pragma once

#include "eqaoa/engine.hpp"
#include "eqaoa/problems.hpp"
#include "eqaoa/schedule.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace eqaoa {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char *kSoftwareVersion = "eqaoa 1.0.0";

// Campaign preset unit: C(20, 3) distinct variable triples at n = 20.
inline constexpr int kPresetTriples = 1140;

struct CampaignCell {
    int m = 0;
    GeneratorMode mode = GeneratorMode::planted;
};

struct CampaignConfig {
    int n = 20;
    std::vector<CampaignCell> cells;
    int reps = 50;
    ScheduleVariant variant = ScheduleVariant::full;
    GammaForm gamma_form = GammaForm::literal;
    LogBase log_base = LogBase::two;
    std::uint64_t base_seed = 1;
    // Repetitions evaluated concurrently; results do not depend on it.
    int threads = 1;
};

/// Seed of repetition `rep` in every cell.
constexpr std::uint64_t rep_seed(const CampaignConfig &config, int rep) {
    return config.base_seed + static_cast<std::uint64_t>(rep);
}

struct CellReport {
    CampaignCell cell;
    int reps = 0;
    int p_max = 0;
    double mean_max = 0.0;
    double std = 0.0; // sample standard deviation of per_rep_max
    std::vector<double> per_rep_max;
    // Mean target probability across repetitions, one entry per iteration.
    std::vector<double> curve;
    std::vector<double> gamma_s;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<CellReport> cells;
};

using ProgressFn = std::function<void(const std::string &)>;

/// Table 1 layout: 2M/4M, planted and random-unsat, full schedule.
CampaignConfig table1_config(GammaForm form, std::uint64_t base_seed = 1);
/// Table 2 layout: 0.5M/M/2M/4M planted, reduced schedule.
CampaignConfig table2_config(GammaForm form, std::uint64_t base_seed = 1);

/**
 * Every cell x repetition: fresh instance from seed base_seed + rep, SAT
 * diagonal normalized by m, argmax target, scheduled standard QAOA run.
 * GenerationError is rethrown with the cell and repetition attached.
 */
CampaignReport run_campaign(const CampaignConfig &config,
                            const ProgressFn &progress = {});

/// One row per cell: constraints | mode | mean max probability | std.
std::string summarize(const CampaignReport &report);

/// Writes one "iteration,gamma_s,mean_target_probability" CSV per cell into
/// `dir` and returns the paths in cell order.
std::vector<std::filesystem::path>
export_trajectories(const CampaignReport &report,
                    const std::filesystem::path &dir);

void write_curve_csv(const std::filesystem::path &path,
                     const std::vector<double> &gamma_s,
                     const std::vector<double> &curve);

/// Single-run trajectory CSV: iteration,gamma_s,target_probability and an
/// expectation column when it was recorded.
void write_trajectory_csv(const std::filesystem::path &path,
                          const Trajectory &trajectory);

/// Constraint label used in tables: "0.5M", "M", "2M", ... when m is a
/// preset multiple at n = 20, the integer otherwise.
std::string constraint_label(int n, int m);

/// Accepts integers or preset strings ("0.5M", "M", "2M", "4M").
int parse_constraint_count(const nlohmann::json &value);

nlohmann::json config_to_json(const CampaignConfig &config);
CampaignConfig config_from_json(const nlohmann::json &j);
nlohmann::json report_to_json(const CampaignReport &report);
CampaignReport report_from_json(const nlohmann::json &j);

} // namespace eqaoa
