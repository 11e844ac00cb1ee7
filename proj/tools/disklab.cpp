#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "disklab/experiments.hpp"
#include "disklab/maps.hpp"

namespace {

constexpr int kExitVerdictFail = 2;
constexpr int kExitConfigError = 1;
constexpr int kExitUsage = 64;
constexpr int kExitBadZeros = 65;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"disklab: numerical laboratory for integral operators on the unit disk"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a named experiment and write a report");
    std::string experiment, config_path, out_path, zeros_path, format = "json";
    run->add_option("experiment", experiment, "one of: identities, breal, frostman, stolz, spiral, comb, classes")
        ->required();
    run->add_option("--config", config_path, "key = value configuration file");
    run->add_option("--out", out_path, "report output path (default <experiment>_report.json)");
    run->add_option("--zeros", zeros_path, "zero sequence CSV (re,im or modulus,arg_radians)");
    run->add_option("--format", format, "json | csv (csv additionally dumps the tables)")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const auto& names = disklab::experiment_names();
    if (std::find(names.begin(), names.end(), experiment) == names.end()) {
        std::fprintf(stderr, "unknown experiment: %s\n", experiment.c_str());
        return kExitUsage;
    }

    disklab::LabConfig config;
    if (!config_path.empty()) {
        try {
            config = disklab::LabConfig::parse_file(config_path);
        } catch (const disklab::ConfigError& e) {
            std::fprintf(stderr, "config error (line %d): %s\n", e.line, e.what());
            return kExitConfigError;
        }
    }

    std::optional<disklab::ZeroSequence> zeros;
    if (!zeros_path.empty()) {
        try {
            zeros = disklab::read_zeros_csv(zeros_path);
        } catch (const disklab::FileFormatError& e) {
            std::fprintf(stderr, "zero file error (line %d): %s\n", e.line, e.what());
            return kExitBadZeros;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "zero file error: %s\n", e.what());
            return kExitBadZeros;
        }
    }

    if (out_path.empty()) out_path = experiment + "_report.json";

    try {
        const disklab::ExperimentReport report =
            disklab::run_experiment(experiment, config, zeros);
        report.write_json(out_path);
        if (format == "csv") report.write_csv_tables(out_path);
        for (const auto& v : report.verdicts) {
            const char* status = v.status == disklab::VerdictStatus::pass       ? "pass"
                                 : v.status == disklab::VerdictStatus::unstable ? "unstable"
                                                                                : "FAIL";
            std::printf("%-28s %s%s%s\n", v.name.c_str(), status, v.note.empty() ? "" : "  # ",
                        v.note.c_str());
        }
        std::printf("report written to %s\n", out_path.c_str());
        return report.all_pass() ? 0 : kExitVerdictFail;
    } catch (const disklab::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfigError;
    }
}
