#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qroute/fuel_model.hpp"
#include "qroute/mesh_grid.hpp"
#include "qroute/qmf.hpp"
#include "qroute/resource_estimator.hpp"
#include "qroute/route.hpp"
#include "qroute/sssp.hpp"

namespace qroute {

/// Pipeline failure tagged with the stage that raised it.
class PipelineError : public std::runtime_error {
  public:
    PipelineError(std::string stage, const std::string& message)
        : std::runtime_error(message), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

  private:
    std::string stage_;
};

enum class Stage { Grid, Weigh, Solve, Estimate };
enum class Solver { Classical, Quantum, Both };

Solver parse_solver(std::string_view name);
std::string_view solver_name(Solver s);

struct PipelineConfig {
    std::filesystem::path route_file;
    std::size_t midpoints = 0;
    PerturbationSpec perturbation;
    AltitudeProfile altitude_profile;  // cruise altitude comes from the route
    std::optional<std::filesystem::path> aircraft_file;
    std::optional<std::filesystem::path> modality_file;
    std::optional<std::filesystem::path> decomposition_file;
    Solver solver = Solver::Both;
    QmfConfig qmf{64, 512, true};
    ClassicalCostModel classical;
    std::uint64_t seed = 42;
    std::filesystem::path out_dir = "out";
};

/// Reads a pipeline config JSON; relative paths resolve against the file's directory.
PipelineConfig load_pipeline_config(const std::filesystem::path& path);
PipelineConfig parse_pipeline_config(std::string_view document, const std::filesystem::path& base_dir);

struct PipelineResult {
    Route route;
    Path original;  // densified, altitude-profiled
    std::vector<Path> perturbed;
    LayeredDag dag;
    std::vector<EdgeFuelBreakdown> breakdowns;
    std::optional<SsspReport> classical;
    std::optional<SsspReport> quantum;
    std::vector<CostReport> costs;  // executed QMF rounds, ranked
    GateCounts executed_counts;
    std::optional<CrossoverPoint> crossover;
    std::string crossover_modality;
};

/// Runs ingest -> grid -> weigh -> solve -> estimate, stopping after `stage`.
/// Throws PipelineError naming the failing stage.
PipelineResult run_pipeline(const PipelineConfig& config, Stage stage = Stage::Estimate);

/// Writes the output bundle for the stages that ran. Files are a pure
/// function of the result: no timestamps, fixed float formatting.
void write_bundle(const PipelineResult& result, const PipelineConfig& config, Stage stage);

// --- benchmark -------------------------------------------------------------

struct BenchmarkRoute {
    std::string name;
    std::string category;
    std::filesystem::path file;
    std::size_t midpoints = 0;
};

struct BenchmarkConfig {
    PipelineConfig base;  // route_file / midpoints ignored
    std::vector<BenchmarkRoute> routes;
};

BenchmarkConfig load_benchmark_config(const std::filesystem::path& path);

struct BenchmarkRow {
    std::string route;
    std::string category;
    std::string status = "ok";
    std::size_t waypoints = 0;
    std::size_t midpoints = 0;
    double distance_km = 0.0;
    std::size_t layers = 0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double density = 0.0;
    double classical_fuel_kg = 0.0;
    double quantum_fuel_kg = 0.0;
    std::uint64_t qmf_oracle_calls = 0;
    std::map<std::string, double> modality_seconds;
};

struct CategoryAverage {
    std::string category;
    std::size_t routes = 0;
    double distance_km = 0.0;
    double waypoints = 0.0;
    double midpoints = 0.0;
    double nodes = 0.0;
    double edges = 0.0;
    double classical_fuel_kg = 0.0;
    double quantum_fuel_kg = 0.0;
    double qmf_oracle_calls = 0.0;
    std::map<std::string, double> modality_seconds;
};

struct BenchmarkTable {
    std::vector<BenchmarkRow> rows;
    std::vector<CategoryAverage> averages;  // categories in first-seen order
};

BenchmarkRow benchmark_route(const PipelineConfig& base, const BenchmarkRoute& route);
/// One row per route, routes evaluated concurrently; failures land in the row status.
BenchmarkTable run_benchmark(const BenchmarkConfig& config);
void write_benchmark(const BenchmarkTable& table, const std::filesystem::path& out_dir);

std::string benchmark_csv(const BenchmarkTable& table);

}  // namespace qroute
