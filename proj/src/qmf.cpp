#include "qroute/qmf.hpp"

namespace qroute {

QmfStats& QmfStats::operator+=(const QmfStats& o) {
    oracle_invocations += o.oracle_invocations;
    grover_iterations_total += o.grover_iterations_total;
    measurements += o.measurements;
    outer_rounds += o.outer_rounds;
    restarts += o.restarts;
    calls += o.calls;
    if (shots_per_round == 0) shots_per_round = o.shots_per_round;
    gate_counts += o.gate_counts;
    return *this;
}

int index_qubits(std::size_t n) {
    int w = 1;
    while ((std::size_t{1} << w) < n) ++w;
    return w;
}

std::size_t grover_iterations(std::size_t n, std::size_t m) {
    if (m == 0) throw QmfError("grover_iterations: no marked element");
    if (m > n) throw QmfError("grover_iterations: more marked elements than the search space");
    return static_cast<std::size_t>(std::floor(std::numbers::pi / 4.0 *
                                               std::sqrt(static_cast<double>(n) / static_cast<double>(m))));
}

Circuit grover_round_circuit(const std::vector<std::uint64_t>& marked, int index_qubits,
                             std::size_t iterations, bool workspace) {
    Circuit c(index_qubits + (workspace ? 1 : 0));
    std::vector<int> reg(static_cast<std::size_t>(index_qubits));
    for (int q = 0; q < index_qubits; ++q) reg[static_cast<std::size_t>(q)] = q;

    for (int q = 0; q < c.num_qubits(); ++q) c.add({GateKind::PrepZero, {q}, 0.0, {}});
    for (int q : reg) c.add(Gate::single(GateKind::H, q));
    const Gate oracle = Gate::phase_flip(reg, marked);
    const Gate zero_flip = Gate::phase_flip(reg, {0});
    for (std::size_t k = 0; k < iterations; ++k) {
        c.add(oracle);
        for (int q : reg) c.add(Gate::single(GateKind::H, q));
        c.add(zero_flip);
        for (int q : reg) c.add(Gate::single(GateKind::H, q));
    }
    for (int q : reg) c.add({GateKind::MeasureZ, {q}, 0.0, {}});
    return c;
}

std::uint64_t most_common_outcome(const MeasurementHistogram& h, std::uint64_t limit) {
    std::uint64_t best = limit;
    std::uint64_t best_count = 0;
    for (const auto& [outcome, count] : h.counts) {
        if (outcome >= limit) continue;
        if (count > best_count) {
            best = outcome;
            best_count = count;
        }
    }
    return best;
}

}  // namespace qroute
