#include "qroute/resource_estimator.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "builtin_modality_gate_times.hpp"
#include "qroute/qmf.hpp"

namespace qroute {

std::vector<ModalityGateTimes> load_modality_tables(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw EstimateError(std::string("modality tables: ") + e.what());
    }
    if (!doc.is_object()) throw EstimateError("modality tables: top level must be an object");

    std::vector<ModalityGateTimes> tables;
    for (const auto& [name, gates] : doc.items()) {
        if (name.starts_with('_')) continue;  // comment keys
        if (!gates.is_object()) throw EstimateError("modality tables: '" + name + "' must map gates to seconds");
        ModalityGateTimes t;
        t.modality = name;
        for (const auto& [gate, seconds] : gates.items()) {
            if (!seconds.is_number() || !(seconds.get<double>() > 0.0))
                throw EstimateError("modality tables: " + name + "/" + gate + " must be a positive number");
            try {
                t.set(basis_from_name(gate), seconds.get<double>());
            } catch (const QsimError& e) {
                throw EstimateError(std::string("modality tables: ") + e.what());
            }
        }
        tables.push_back(std::move(t));
    }
    std::sort(tables.begin(), tables.end(),
              [](const ModalityGateTimes& a, const ModalityGateTimes& b) { return a.modality < b.modality; });
    return tables;
}

std::vector<ModalityGateTimes> load_modality_tables_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw EstimateError("cannot open modality tables " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return load_modality_tables(ss.str());
}

const std::vector<ModalityGateTimes>& builtin_modality_tables() {
    static const auto tables = load_modality_tables(kBuiltinModalityGateTimes);
    return tables;
}

CostReport estimate_runtime(const GateCounts& counts, const ModalityGateTimes& times) {
    CostReport r;
    r.modality = times.modality;
    r.counts = counts;
    for (std::size_t i = 0; i < kNumBasisGates; ++i) {
        const auto g = static_cast<BasisGate>(i);
        if (counts[g] == 0) continue;
        const auto unit = times[g];
        if (!unit)
            throw EstimateError("modality " + times.modality + " has no unit time for " + std::string(basis_name(g)));
        const double subtotal = static_cast<double>(counts[g]) * *unit;
        r.lines.push_back({g, counts[g], *unit, subtotal});
        r.total_s += subtotal;
    }
    return r;
}

std::vector<CostReport> compare_modalities(const GateCounts& counts, const std::vector<ModalityGateTimes>& tables) {
    std::vector<CostReport> reports;
    reports.reserve(tables.size());
    for (const auto& t : tables) reports.push_back(estimate_runtime(counts, t));
    std::stable_sort(reports.begin(), reports.end(), [](const CostReport& a, const CostReport& b) {
        if (a.total_s != b.total_s) return a.total_s < b.total_s;
        return a.modality < b.modality;
    });
    return reports;
}

double classical_min_cost(std::size_t n, const ClassicalCostModel& model) {
    if (n == 0) throw EstimateError("classical minimum of an empty list");
    return model.overhead_s + static_cast<double>(n - 1) * model.per_comparison_s;
}

GateCounts qmf_reference_counts(std::size_t n) {
    if (n < 2 || n > kMaxQmfInput) throw EstimateError("QMF reference size out of range");
    const int width = index_qubits(n);
    const std::size_t k = grover_iterations(std::size_t{1} << width, 1);
    return transpile_counts(grover_round_circuit({0}, width, k, true));
}

std::optional<CrossoverPoint> find_crossover(const ModalityGateTimes& times, const ClassicalCostModel& model,
                                             std::size_t n_min, std::size_t n_max) {
    n_min = std::max<std::size_t>(n_min, 2);
    n_max = std::min(n_max, kMaxQmfInput);
    for (std::size_t n = n_min; n <= n_max; ++n) {
        const double q = estimate_runtime(qmf_reference_counts(n), times).total_s;
        const double c = classical_min_cost(n, model);
        if (q < c) return CrossoverPoint{n, q, c};
    }
    return std::nullopt;
}

}  // namespace qroute
