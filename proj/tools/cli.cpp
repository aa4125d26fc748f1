#include "cli.hpp"

#include "eqaoa/campaign.hpp"
#include "eqaoa/errors.hpp"
#include "eqaoa/oracle.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace eqaoa::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
        throw IoError("cannot write '" + path.string() + "'");
    }
}

nlohmann::json parse_json(const std::string &text, const fs::path &path) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(0, path.string() + ": " + e.what());
    }
}

fs::path sidecar_path(const fs::path &cnf) {
    fs::path p = cnf;
    p += ".json";
    return p;
}

struct GenerateArgs {
    int n = 20;
    int m = 0;
    std::string mode = "planted";
    std::uint64_t seed = 1;
    std::string out;
};

struct RunArgs {
    std::string instance;
    std::string schedule = "full";
    std::string gamma_form = "literal";
    std::string log_base = "2";
    std::string engine = "standard";
    bool expectation = false;
    std::string out;
};

struct CampaignArgs {
    std::string config;
    std::string out_dir;
};

struct ReportArgs {
    std::string in;
    std::string format = "text";
};

void cmd_generate(const GenerateArgs &a, std::ostream &err) {
    const GeneratorSpec spec{a.n, a.m, parse_generator_mode(a.mode), a.seed};
    InstanceMetadata meta{a.n, a.m, spec.mode, a.seed, std::nullopt};
    SatInstance instance;
    if (spec.mode == GeneratorMode::planted) {
        auto planted = generate_planted_sat(spec);
        instance = std::move(planted.instance);
        meta.planted = planted.planted;
    } else {
        instance = generate_random_unsat(spec);
    }
    write_file(a.out, emit_dimacs(instance));
    write_file(sidecar_path(a.out), nlohmann::json(meta).dump(2) + "\n");
    err << "wrote " << a.out << " and " << sidecar_path(a.out).string() << "\n";
}

void cmd_run(const RunArgs &a, std::ostream &out, std::ostream &err) {
    const SatInstance instance = parse_dimacs(read_file(a.instance));
    const int m = static_cast<int>(instance.m());
    const DiagonalObjective raw = build_sat_diagonal(instance);
    const NormalizedDiagonal diag = normalize(raw, m);

    RunConfig config;
    config.schedule =
        make_schedule(instance.n, m, parse_variant(a.schedule),
                      parse_gamma_form(a.gamma_form), parse_log_base(a.log_base));
    config.record_expectation = a.expectation;
    config.target = exhaustive_max(raw.values).argmax;

    Trajectory trajectory;
    if (a.engine == "standard") {
        trajectory = run_standard(diag, config);
    } else if (a.engine == "enhanced") {
        trajectory =
            run_enhanced(scaled(projector_coefficients(raw), 1.0 / m), config);
    } else {
        throw DomainError("unknown engine '" + a.engine + "'");
    }
    write_trajectory_csv(a.out, trajectory);

    err << "n=" << instance.n << " m=" << m << " p_max=" << config.schedule.p_max
        << " satisfiable=" << (diag.satisfiable() ? "yes" : "no")
        << " targets=" << config.target.size() << "\n";
    out << "max_target_probability=" << trajectory.max_target_probability
        << "\n";
}

void cmd_campaign(const CampaignArgs &a, std::ostream &err) {
    const CampaignConfig config =
        config_from_json(parse_json(read_file(a.config), a.config));
    const CampaignReport report =
        run_campaign(config, [&err](const std::string &line) {
            err << line << "\n" << std::flush;
        });
    const fs::path dir = a.out_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    }
    write_file(dir / "report.json", report_to_json(report).dump(2) + "\n");
    export_trajectories(report, dir / "trajectories");
    err << summarize(report);
}

void cmd_report(const ReportArgs &a, std::ostream &out) {
    const auto j = parse_json(read_file(a.in), a.in);
    const CampaignReport report = report_from_json(j);
    if (a.format == "text") {
        out << summarize(report);
    } else if (a.format == "json") {
        out << report_to_json(report).dump(2) << "\n";
    } else {
        throw DomainError("unknown report format '" + a.format + "'");
    }
}

void print_error(std::ostream &err, const std::string &kind,
                 const std::string &message) {
    err << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Standard and enhanced QAOA simulation over diagonal "
                 "3-SAT Hamiltonians",
                 "eqaoa"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Generate a 3-SAT instance");
    generate->add_option("--n", gen.n, "Variable count")->default_val(20);
    generate->add_option("--m", gen.m, "Clause count")->required();
    generate->add_option("--mode", gen.mode, "planted | random-unsat")
        ->check(CLI::IsMember({"planted", "random-unsat"}));
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--out", gen.out, "Output DIMACS path")->required();

    RunArgs runa;
    auto *runc = app.add_subcommand("run", "Simulate one instance");
    runc->add_option("--instance", runa.instance, "DIMACS CNF file")->required();
    runc->add_option("--schedule", runa.schedule, "full | reduced")
        ->check(CLI::IsMember({"full", "reduced"}));
    runc->add_option("--gamma-form", runa.gamma_form, "literal | odd")
        ->check(CLI::IsMember({"literal", "odd"}));
    runc->add_option("--log-base", runa.log_base, "2 | e")
        ->check(CLI::IsMember({"2", "e"}));
    runc->add_option("--engine", runa.engine, "standard | enhanced")
        ->check(CLI::IsMember({"standard", "enhanced"}));
    runc->add_flag("--expectation", runa.expectation,
                   "Record <H_C> per iteration");
    runc->add_option("--out", runa.out, "Trajectory CSV path")->required();

    CampaignArgs camp;
    auto *campaign = app.add_subcommand("campaign", "Run a repetition campaign");
    campaign->add_option("--config", camp.config, "Campaign JSON")->required();
    campaign->add_option("--out-dir", camp.out_dir, "Output directory")
        ->required();

    ReportArgs rep;
    auto *report = app.add_subcommand("report", "Render a campaign report");
    report->add_option("--in", rep.in, "report.json")->required();
    report->add_option("--format", rep.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        print_error(err, "usage", e.what());
        return 2;
    }

    try {
        if (*generate) {
            cmd_generate(gen, err);
        } else if (*runc) {
            cmd_run(runa, out, err);
        } else if (*campaign) {
            cmd_campaign(camp, err);
        } else if (*report) {
            cmd_report(rep, out);
        }
    } catch (const Error &e) {
        print_error(err, e.kind(), e.what());
        return 1;
    } catch (const std::exception &e) {
        print_error(err, "internal", e.what());
        return 1;
    }
    return 0;
}

} // namespace eqaoa::cli
