// Command-line front end for the gesture-recognition pipeline.  Every
// subcommand reads one JSON experiment config and writes its artifacts under
// <out>/results/; reruns with the same config produce byte-identical files.
//
// Exit codes:
//   0  success
//   1  unexpected internal error
//   2  config error (missing file, bad schema, inconsistent values)
//   3  forward solver failed to converge
//   4  tie in an argmax (with --strict)
//   5  located position on the sampling-box boundary (with --strict)
//   6  artifact integrity failure (checksum, truncation, bad magic)
//   7  artifact belongs to a different config, or layout mismatch
//   8  identification disagreed with the truth labels

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "emgest/experiment.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    std::string out_dir = "out";
    bool strict = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int threads = -1;  // -1: keep the config value
};

void add_common_options(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--config", args.config_path, "experiment config (JSON)")->required();
    cmd->add_option("--out", args.out_dir,
                    "output directory; artifacts land under <out>/results/");
    cmd->add_flag("--strict", args.strict,
                  "fail on argmax ties and boundary maximizers instead of reporting them");
    cmd->add_option("--seed", args.seed, "override the noise seed from the config")
        ->each([&args](const std::string&) { args.seed_given = true; });
    cmd->add_option("--threads", args.threads, "worker threads (0: one per core)")
        ->envname("EMGEST_THREADS");
}

emgest::ExperimentConfig load_config(const CliArgs& args) {
    emgest::ExperimentConfig cfg = emgest::load_experiment_config(args.config_path);
    if (args.seed_given) cfg.noise.seed = args.seed;
    if (args.threads >= 0) cfg.threads = args.threads;
    for (const std::string& note : emgest::config_advisories(cfg))
        std::fprintf(stderr, "note: %s\n", note.c_str());
    return cfg;
}

int strict_code(const CliArgs& args, bool any_tie, bool any_boundary) {
    if (!args.strict) return 0;
    if (any_tie) return 4;
    if (any_boundary) return 5;
    return 0;
}

int cmd_build_dict(const CliArgs& args) {
    const emgest::ExperimentConfig cfg = load_config(args);
    const emgest::Dictionary dict = emgest::run_build_dict(cfg, args.out_dir);
    std::printf("dictionary: %zu entries (%zu shapes x %d directions) -> %s\n",
                dict.entries.size(), dict.shapes.size(), cfg.dictionary_directions,
                (std::filesystem::path(args.out_dir) / "results/dictionary.bin").c_str());
    return 0;
}

int cmd_simulate(const CliArgs& args) {
    const emgest::ExperimentConfig cfg = load_config(args);
    const auto meas = emgest::run_simulate(cfg, args.out_dir);
    for (const auto& pair : meas)
        std::printf("simulated %s: low band %d iterations, high band %d iterations\n",
                    pair[0].shape_id.c_str(), pair[0].stats.iterations, pair[1].stats.iterations);
    return 0;
}

int cmd_locate(const CliArgs& args) {
    const emgest::ExperimentConfig cfg = load_config(args);
    const emgest::LocateReport report = emgest::run_locate(cfg, args.out_dir);
    for (const emgest::LocationRow& row : report.rows)
        std::printf("located %-8s delta=%-5g z=(%.4f, %.4f, %.4f) error=%.4f%s%s\n",
                    row.shape.c_str(), row.delta, row.result.position.x, row.result.position.y,
                    row.result.position.z, row.error, row.result.on_boundary ? " [boundary]" : "",
                    row.result.ties.size() > 1 ? " [tie]" : "");
    return strict_code(args, report.any_tie, report.any_boundary);
}

int cmd_identify(const CliArgs& args) {
    const emgest::ExperimentConfig cfg = load_config(args);
    const emgest::IdentifyReport report = emgest::run_identify(cfg, args.out_dir);
    for (size_t li = 0; li < report.tables.size(); ++li) {
        const emgest::MatchTable& t = report.tables[li];
        for (size_t r = 0; r < t.row_ids.size(); ++r)
            std::printf("delta=%-5g measured %-8s -> %-8s%s\n", report.levels[li],
                        t.row_ids[r].c_str(), t.column_ids[t.identified[r]].c_str(),
                        t.tie[r] ? " [tie]" : "");
    }
    if (const int code = strict_code(args, report.any_tie, false)) return code;
    return report.all_correct ? 0 : 8;
}

int cmd_experiment(const CliArgs& args) {
    const emgest::ExperimentConfig cfg = load_config(args);
    const emgest::ExperimentReport report = emgest::run_experiment(cfg, args.out_dir);
    std::printf("config %s -> %s\n", report.hash.c_str(),
                (std::filesystem::path(args.out_dir) / "results").c_str());
    std::printf("%s", emgest::io::read_file(std::filesystem::path(args.out_dir) / "timing.txt")
                          .c_str());
    return strict_code(args, report.location.any_tie || report.identification.any_tie,
                       report.location.any_boundary);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-stage electromagnetic gesture recognition (locate, then match)"};
    app.require_subcommand(1);

    CliArgs args;
    CLI::App* build = app.add_subcommand("build-dict", "solve the plane-wave dictionary");
    CLI::App* simulate = app.add_subcommand("simulate", "simulate per-shape measurements");
    CLI::App* locate = app.add_subcommand("locate", "stage 1: low-frequency location");
    CLI::App* identify = app.add_subcommand("identify", "stage 2: dictionary matching");
    CLI::App* experiment = app.add_subcommand("experiment", "full pipeline with noise sweep");
    for (CLI::App* cmd : {build, simulate, locate, identify, experiment})
        add_common_options(cmd, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build_dict(args);
        if (simulate->parsed()) return cmd_simulate(args);
        if (locate->parsed()) return cmd_locate(args);
        if (identify->parsed()) return cmd_identify(args);
        return cmd_experiment(args);
    } catch (const emgest::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const emgest::SolverError& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return 3;
    } catch (const emgest::IntegrityError& e) {
        std::fprintf(stderr, "integrity error: %s\n", e.what());
        return 6;
    } catch (const emgest::LayoutError& e) {
        std::fprintf(stderr, "layout error: %s\n", e.what());
        return 7;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
