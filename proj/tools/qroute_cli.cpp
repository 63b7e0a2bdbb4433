#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qroute/pipeline.hpp"

namespace {

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string algorithm;
    bool raw_qmf = false;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--config", o.config, "pipeline config JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "random seed (overrides the config)");
    cmd->add_option("--out", o.out, "output directory (overrides the config)");
}

void add_solver(CLI::App* cmd, Options& o) {
    cmd->add_option("--algorithm", o.algorithm, "classical, quantum or both")
        ->check(CLI::IsMember({"classical", "quantum", "both"}));
    cmd->add_flag("--raw-qmf", o.raw_qmf, "skip the verification scan after minimum finding");
}

template <typename C>
void apply_overrides(C& c, const Options& o) {
    if (o.seed) c.seed = *o.seed;
    if (!o.out.empty()) c.out_dir = o.out;
    if (!o.algorithm.empty()) c.solver = qroute::parse_solver(o.algorithm);
    if (o.raw_qmf) c.qmf.verify = false;
}

int run_stage(const Options& o, qroute::Stage stage) {
    auto config = qroute::load_pipeline_config(o.config);
    apply_overrides(config, o);
    const auto result = qroute::run_pipeline(config, stage);
    qroute::write_bundle(result, config, stage);
    std::cout << "wrote " << config.out_dir.string() << '\n';
    return 0;
}

int run_bench(const Options& o) {
    auto config = qroute::load_benchmark_config(o.config);
    apply_overrides(config.base, o);
    const auto table = qroute::run_benchmark(config);
    qroute::write_benchmark(table, config.base.out_dir);
    std::cout << qroute::benchmark_csv(table);
    for (const auto& row : table.rows)
        if (row.status != "ok") return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuel-optimal route search over a perturbed waypoint grid"};
    app.require_subcommand(1);

    Options o;
    auto* grid = app.add_subcommand("grid", "build the layered grid");
    auto* weigh = app.add_subcommand("weigh", "build the grid and weigh edges by fuel burn");
    auto* solve = app.add_subcommand("solve", "find the fuel-optimal path");
    auto* estimate = app.add_subcommand("estimate", "solve and estimate quantum runtime per modality");
    auto* bench = app.add_subcommand("bench", "run the route benchmark");
    for (auto* cmd : {grid, weigh, solve, estimate, bench}) add_common(cmd, o);
    for (auto* cmd : {solve, estimate}) add_solver(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: stage=args: " << e.what() << '\n';
        return 1;
    }

    try {
        if (grid->parsed()) return run_stage(o, qroute::Stage::Grid);
        if (weigh->parsed()) return run_stage(o, qroute::Stage::Weigh);
        if (solve->parsed()) return run_stage(o, qroute::Stage::Solve);
        if (estimate->parsed()) return run_stage(o, qroute::Stage::Estimate);
        return run_bench(o);
    } catch (const qroute::PipelineError& e) {
        std::cerr << "error: stage=" << e.stage() << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: stage=unknown: " << e.what() << '\n';
    }
    return 1;
}
