#include "eqaoa/campaign.hpp"

#include "eqaoa/errors.hpp"
#include "eqaoa/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace eqaoa {

namespace {

struct RepOutcome {
    double max_probability = 0.0;
    std::vector<double> probabilities;
};

RepOutcome run_rep(const CampaignConfig &config, const CampaignCell &cell,
                   const Schedule &schedule, int rep) {
    const GeneratorSpec spec{config.n, cell.m, cell.mode, rep_seed(config, rep)};
    const SatInstance instance = cell.mode == GeneratorMode::planted
                                     ? generate_planted_sat(spec).instance
                                     : generate_random_unsat(spec);
    const DiagonalObjective raw = build_sat_diagonal(instance);

    RunConfig run;
    run.schedule = schedule;
    run.target = exhaustive_max(raw.values).argmax;
    const Trajectory trajectory =
        run_standard(normalize(raw, static_cast<double>(cell.m)), run);

    RepOutcome out;
    out.max_probability = trajectory.max_target_probability;
    out.probabilities.reserve(trajectory.points.size());
    for (const auto &point : trajectory.points) {
        out.probabilities.push_back(point.target_probability);
    }
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_for_write(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    return out;
}

void finish_write(std::ofstream &out, const std::filesystem::path &path) {
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

} // namespace

CampaignConfig table1_config(GammaForm form, std::uint64_t base_seed) {
    CampaignConfig c;
    c.n = 20;
    c.cells = {{2 * kPresetTriples, GeneratorMode::planted},
               {2 * kPresetTriples, GeneratorMode::random_unsat},
               {4 * kPresetTriples, GeneratorMode::planted},
               {4 * kPresetTriples, GeneratorMode::random_unsat}};
    c.reps = 50;
    c.variant = ScheduleVariant::full;
    c.gamma_form = form;
    c.base_seed = base_seed;
    return c;
}

CampaignConfig table2_config(GammaForm form, std::uint64_t base_seed) {
    CampaignConfig c;
    c.n = 20;
    c.cells = {{kPresetTriples / 2, GeneratorMode::planted},
               {kPresetTriples, GeneratorMode::planted},
               {2 * kPresetTriples, GeneratorMode::planted},
               {4 * kPresetTriples, GeneratorMode::planted}};
    c.reps = 50;
    c.variant = ScheduleVariant::reduced;
    c.gamma_form = form;
    c.base_seed = base_seed;
    return c;
}

CampaignReport run_campaign(const CampaignConfig &config,
                            const ProgressFn &progress) {
    if (config.reps < 1) {
        throw DomainError("campaign needs reps >= 1");
    }
    if (config.cells.empty()) {
        throw DomainError("campaign needs at least one cell");
    }
    if (config.gamma_form == GammaForm::custom) {
        throw DomainError("campaigns use formula schedules");
    }
    const int threads = std::max(1, config.threads);
    std::mutex progress_lock;

    CampaignReport report;
    report.config = config;
    for (std::size_t ci = 0; ci < config.cells.size(); ++ci) {
        const CampaignCell &cell = config.cells[ci];
        const Schedule schedule = make_schedule(
            config.n, cell.m, config.variant, config.gamma_form, config.log_base);

        std::vector<RepOutcome> outcomes(static_cast<std::size_t>(config.reps));
        std::vector<std::exception_ptr> failures(outcomes.size());
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int rep = next++; rep < config.reps; rep = next++) {
                try {
                    outcomes[rep] = run_rep(config, cell, schedule, rep);
                } catch (...) {
                    failures[rep] = std::current_exception();
                    continue;
                }
                if (progress) {
                    const std::lock_guard lock(progress_lock);
                    progress("cell " + std::to_string(ci + 1) + "/" +
                             std::to_string(config.cells.size()) + " (m=" +
                             std::to_string(cell.m) + ", " +
                             to_string(cell.mode) + ") rep " +
                             std::to_string(rep + 1) + "/" +
                             std::to_string(config.reps) + " max=" +
                             format_double(outcomes[rep].max_probability));
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            for (int t = 1; t < threads; ++t) {
                pool.emplace_back(worker);
            }
            worker();
        }
        for (int rep = 0; rep < config.reps; ++rep) {
            if (!failures[rep]) {
                continue;
            }
            const std::string where = "cell " + std::to_string(ci) + " (m=" +
                                      std::to_string(cell.m) + ", " +
                                      to_string(cell.mode) + ") rep " +
                                      std::to_string(rep);
            try {
                std::rethrow_exception(failures[rep]);
            } catch (const GenerationError &e) {
                throw GenerationError(where + ": " + e.what());
            }
        }

        CellReport cr;
        cr.cell = cell;
        cr.reps = config.reps;
        cr.p_max = schedule.p_max;
        for (int p = 1; p <= schedule.p_max; ++p) {
            cr.gamma_s.push_back(schedule.gamma_at(p));
        }
        cr.curve.assign(static_cast<std::size_t>(schedule.p_max), 0.0);
        double sum = 0.0;
        for (const RepOutcome &o : outcomes) {
            cr.per_rep_max.push_back(o.max_probability);
            sum += o.max_probability;
            for (std::size_t i = 0; i < o.probabilities.size(); ++i) {
                cr.curve[i] += o.probabilities[i];
            }
        }
        const double reps = static_cast<double>(config.reps);
        cr.mean_max = sum / reps;
        for (double &c : cr.curve) {
            c /= reps;
        }
        if (config.reps > 1) {
            double ss = 0.0;
            for (const double v : cr.per_rep_max) {
                ss += (v - cr.mean_max) * (v - cr.mean_max);
            }
            cr.std = std::sqrt(ss / (reps - 1.0));
        }
        report.cells.push_back(std::move(cr));
    }
    return report;
}

std::string constraint_label(int n, int m) {
    if (n == 20) {
        if (2 * m == kPresetTriples) {
            return "0.5M";
        }
        if (m == kPresetTriples) {
            return "M";
        }
        if (m % kPresetTriples == 0) {
            return std::to_string(m / kPresetTriples) + "M";
        }
    }
    return std::to_string(m);
}

int parse_constraint_count(const nlohmann::json &value) {
    if (value.is_number_integer()) {
        return value.get<int>();
    }
    if (value.is_string()) {
        const std::string s = value.get<std::string>();
        if (s == "0.5M") {
            return kPresetTriples / 2;
        }
        if (!s.empty() && s.back() == 'M') {
            const std::string factor = s.substr(0, s.size() - 1);
            if (factor.empty()) {
                return kPresetTriples;
            }
            if (factor.find_first_not_of("0123456789") == std::string::npos) {
                return std::stoi(factor) * kPresetTriples;
            }
        }
        throw DomainError("unknown constraint preset '" + s + "'");
    }
    throw DomainError("constraint count must be an integer or preset string");
}

std::string summarize(const CampaignReport &report) {
    if (report.cells.empty()) {
        throw DomainError("cannot summarize a report without cells");
    }
    std::ostringstream out;
    out << "constraints | mode | mean max probability | std\n";
    char buf[128];
    for (const CellReport &c : report.cells) {
        std::snprintf(buf, sizeof buf, "%s | %s | %.4f | %.4f\n",
                      constraint_label(report.config.n, c.cell.m).c_str(),
                      c.cell.mode == GeneratorMode::planted ? "satisfied"
                                                            : "unsatisfied",
                      c.mean_max, c.std);
        out << buf;
    }
    return out.str();
}

void write_curve_csv(const std::filesystem::path &path,
                     const std::vector<double> &gamma_s,
                     const std::vector<double> &curve) {
    if (gamma_s.size() != curve.size()) {
        throw ShapeError("gamma_s and curve lengths differ");
    }
    auto out = open_for_write(path);
    out << "iteration,gamma_s,mean_target_probability\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out << (i + 1) << ',' << format_double(gamma_s[i]) << ','
            << format_double(curve[i]) << '\n';
    }
    finish_write(out, path);
}

std::vector<std::filesystem::path>
export_trajectories(const CampaignReport &report,
                    const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    }
    std::vector<std::filesystem::path> paths;
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        const CellReport &c = report.cells[i];
        const auto path = dir / ("cell" + std::to_string(i) + "_" +
                                 to_string(c.cell.mode) + "_m" +
                                 std::to_string(c.cell.m) + ".csv");
        write_curve_csv(path, c.gamma_s, c.curve);
        paths.push_back(path);
    }
    return paths;
}

void write_trajectory_csv(const std::filesystem::path &path,
                          const Trajectory &trajectory) {
    const bool with_expectation =
        !trajectory.points.empty() && trajectory.points.front().expectation;
    auto out = open_for_write(path);
    out << "iteration,gamma_s,target_probability";
    out << (with_expectation ? ",expectation\n" : "\n");
    for (const auto &point : trajectory.points) {
        out << point.p << ',' << format_double(point.gamma_s) << ','
            << format_double(point.target_probability);
        if (with_expectation) {
            out << ',' << format_double(point.expectation.value_or(0.0));
        }
        out << '\n';
    }
    finish_write(out, path);
}

nlohmann::json config_to_json(const CampaignConfig &config) {
    nlohmann::json cells = nlohmann::json::array();
    for (const CampaignCell &c : config.cells) {
        cells.push_back({{"m", c.m}, {"mode", to_string(c.mode)}});
    }
    return {{"n", config.n},
            {"cells", cells},
            {"reps", config.reps},
            {"schedule", to_string(config.variant)},
            {"gamma_form", to_string(config.gamma_form)},
            {"log_base", to_string(config.log_base)},
            {"base_seed", config.base_seed},
            {"threads", config.threads}};
}

CampaignConfig config_from_json(const nlohmann::json &j) {
    CampaignConfig c;
    try {
        c.n = j.value("n", 20);
        for (const auto &cell : j.at("cells")) {
            c.cells.push_back({parse_constraint_count(cell.at("m")),
                               parse_generator_mode(cell.value(
                                   "mode", std::string("planted")))});
        }
        c.reps = j.value("reps", 50);
        c.variant = parse_variant(j.value("schedule", std::string("full")));
        c.gamma_form =
            parse_gamma_form(j.value("gamma_form", std::string("literal")));
        c.log_base = parse_log_base(j.value("log_base", std::string("2")));
        c.base_seed = j.value("base_seed", std::uint64_t{1});
        c.threads = j.value("threads", 1);
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("invalid campaign config: ") + e.what());
    }
    if (c.reps < 1) {
        throw DomainError("campaign config needs reps >= 1");
    }
    if (c.cells.empty()) {
        throw DomainError("campaign config needs at least one cell");
    }
    return c;
}

nlohmann::json report_to_json(const CampaignReport &report) {
    nlohmann::json cells = nlohmann::json::array();
    for (const CellReport &c : report.cells) {
        cells.push_back({{"m", c.cell.m},
                         {"mode", to_string(c.cell.mode)},
                         {"reps", c.reps},
                         {"p_max", c.p_max},
                         {"mean_max", c.mean_max},
                         {"std", c.std},
                         {"per_rep_max", c.per_rep_max},
                         {"curve", c.curve},
                         {"gamma_s", c.gamma_s}});
    }
    const CampaignConfig &cfg = report.config;
    nlohmann::json provenance = {
        {"software_version", kSoftwareVersion},
        {"rng", Rng::kName},
        {"seeds",
         {{"base_seed", cfg.base_seed},
          {"first", rep_seed(cfg, 0)},
          {"last", rep_seed(cfg, cfg.reps - 1)},
          {"rule", "base_seed + rep_index"}}},
        {"schedule",
         {{"variant", to_string(cfg.variant)},
          {"gamma_form", to_string(cfg.gamma_form)},
          {"beta", beta_default(cfg.n)}}},
        {"log_base", to_string(cfg.log_base)}};
    return {{"schema_version", kReportSchemaVersion},
            {"config", config_to_json(cfg)},
            {"provenance", provenance},
            {"cells", cells}};
}

CampaignReport report_from_json(const nlohmann::json &j) {
    CampaignReport r;
    try {
        const int version = j.at("schema_version").get<int>();
        if (version != kReportSchemaVersion) {
            throw DomainError("unsupported report schema_version " +
                              std::to_string(version));
        }
        r.config = config_from_json(j.at("config"));
        for (const auto &c : j.at("cells")) {
            CellReport cr;
            cr.cell.m = c.at("m").get<int>();
            cr.cell.mode = parse_generator_mode(c.at("mode").get<std::string>());
            cr.reps = c.at("reps").get<int>();
            cr.p_max = c.value("p_max", 0);
            cr.mean_max = c.at("mean_max").get<double>();
            cr.std = c.at("std").get<double>();
            cr.per_rep_max = c.at("per_rep_max").get<std::vector<double>>();
            cr.curve = c.at("curve").get<std::vector<double>>();
            cr.gamma_s = c.value("gamma_s", std::vector<double>{});
            r.cells.push_back(std::move(cr));
        }
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("invalid campaign report: ") + e.what());
    }
    return r;
}

} // namespace eqaoa
