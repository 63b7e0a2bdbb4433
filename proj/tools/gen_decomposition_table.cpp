// Prints the gate decomposition table derived from the constructive
// decompositions in qsim. The output is committed as
// data/decomposition_table.json; tests check the two stay in sync.

#include <iostream>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "qroute/qsim.hpp"

namespace {

using namespace qroute;

nlohmann::ordered_json to_json(const GateCounts& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < kNumBasisGates; ++i)
        if (c.n[i] != 0) j[std::string(basis_name(static_cast<BasisGate>(i)))] = c.n[i];
    return j;
}

GateCounts expanded(const std::vector<Gate>& gates) {
    std::vector<Gate> flat;
    for (const Gate& g : gates) {
        auto e = expand_to_basis(g);
        flat.insert(flat.end(), e.begin(), e.end());
    }
    return count_basis_gates(flat);
}

}  // namespace

int main() {
    using K = GateKind;
    nlohmann::ordered_json doc;
    doc["version"] = "1.0.0";
    doc["description"] =
        "Native gate -> basis gate counts. TDG = Z S T and SDG = Z S exactly. "
        "mcz_by_controls[c] is a Z on |1..1> of c+1 qubits; for c >= 3 it borrows one spare "
        "register qubit as a dirty ancilla (Toffoli ladders, each Toffoli = 2 H, 6 CNOT, 7 T-type).";
    doc["basis"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < kNumBasisGates; ++i) doc["basis"].push_back(basis_name(static_cast<BasisGate>(i)));

    auto& native = doc["native"];
    for (K k : {K::X, K::Y, K::Z, K::H, K::S, K::Sdg, K::T, K::Tdg})
        native[std::string(gate_name(k))] = to_json(expanded({Gate::single(k, 0)}));
    native["CNOT"] = to_json(expanded({Gate::cnot(0, 1)}));
    native["CZ"] = to_json(expanded({Gate::cz(0, 1)}));
    native["CS"] = to_json(expanded({Gate::cphase(0, 1, std::numbers::pi / 2)}));
    native["CSDG"] = to_json(expanded({Gate::cphase(0, 1, -std::numbers::pi / 2)}));
    native["SWAP"] = to_json(expanded({Gate::swap(0, 1)}));
    native["CCX"] = to_json(expanded({Gate::ccx(0, 1, 2)}));
    native["PREP_ZERO"] = to_json(expanded({Gate{K::PrepZero, {0}, 0.0, {}}}));
    native["MEASURE_Z"] = to_json(expanded({Gate{K::MeasureZ, {0}, 0.0, {}}}));

    doc["mcz_by_controls"] = nlohmann::ordered_json::array();
    for (int controls = 0; controls <= kMaxQubits - 1; ++controls) {
        std::vector<int> qubits(static_cast<std::size_t>(controls) + 1);
        std::iota(qubits.begin(), qubits.end(), 0);
        const std::vector<int> spare{controls + 1};
        doc["mcz_by_controls"].push_back(to_json(expanded(decompose_mcz(qubits, spare))));
    }
    std::cout << doc.dump(2) << "\n";
}
