#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qroute/qsim.hpp"

namespace qroute {

class EstimateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Per-basis-gate execution time of one qubit technology, seconds.
struct ModalityGateTimes {
    std::string modality;
    std::array<std::optional<double>, kNumBasisGates> unit_time_s{};

    std::optional<double> operator[](BasisGate g) const { return unit_time_s[static_cast<std::size_t>(g)]; }
    void set(BasisGate g, double seconds) { unit_time_s[static_cast<std::size_t>(g)] = seconds; }
};

/// Parses {modality: {gate: seconds}}; tables come back sorted by modality name.
std::vector<ModalityGateTimes> load_modality_tables(std::string_view document);
std::vector<ModalityGateTimes> load_modality_tables_file(const std::filesystem::path& path);
/// The default tables from data/modality_gate_times.json, compiled in.
const std::vector<ModalityGateTimes>& builtin_modality_tables();

struct CostLine {
    BasisGate gate = BasisGate::CNOT;
    std::uint64_t count = 0;
    double unit_time_s = 0.0;
    double subtotal_s = 0.0;
};

struct CostReport {
    std::string modality;
    GateCounts counts;
    std::vector<CostLine> lines;  // one per counted gate, basis order
    double total_s = 0.0;
};

/// Sum of count x unit time per gate. Throws if a counted gate has no time.
CostReport estimate_runtime(const GateCounts& counts, const ModalityGateTimes& times);

/// Reports sorted by total ascending, modality name on ties.
std::vector<CostReport> compare_modalities(const GateCounts& counts, const std::vector<ModalityGateTimes>& tables);

/// Linear-scan minimum: overhead + (N - 1) comparisons. The defaults are
/// placeholders, not measurements of any host.
struct ClassicalCostModel {
    double per_comparison_s = 1e-9;
    double overhead_s = 0.0;
};

double classical_min_cost(std::size_t n, const ClassicalCostModel& model = {});

/// Basis counts of the longest single QMF round for a list of size N: one
/// marked entry, so floor(pi/4 sqrt(2^ceil(log2 N))) iterations, with the workspace qubit.
GateCounts qmf_reference_counts(std::size_t n);

struct CrossoverPoint {
    std::size_t n = 0;
    double quantum_s = 0.0;
    double classical_s = 0.0;
};

/// Smallest N in [n_min, n_max] at which the QMF reference circuit priced with
/// `times` beats the classical scan, if any.
std::optional<CrossoverPoint> find_crossover(const ModalityGateTimes& times, const ClassicalCostModel& model,
                                             std::size_t n_min = 2, std::size_t n_max = 4096);

}  // namespace qroute
