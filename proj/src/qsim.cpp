#include "qroute/qsim.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "builtin_decomposition_table.hpp"

namespace qroute {

namespace {

constexpr int kMaxCircuitQubits = 32;

constexpr std::array<std::string_view, kNumBasisGates> kBasisNames = {
    "CNOT", "SWAP", "H", "PREP_PLUS", "PREP_ZERO", "MEAS_X", "MEAS_Z", "X", "Y", "Z", "S", "T"};

std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::CPhase: return 2;
        case GateKind::CCX: return 3;
        case GateKind::DiagonalPhase: return 0;  // variable
        default: return 1;
    }
}

// Angle reduced into [0, 2pi).
double reduce_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

bool angle_is(double reduced, double target) {
    constexpr double tol = 1e-12;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return std::abs(reduced - target) < tol || std::abs(reduced - target - two_pi) < tol ||
           std::abs(reduced - target + two_pi) < tol;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::SWAP: return "SWAP";
        case GateKind::CPhase: return "CPHASE";
        case GateKind::CCX: return "CCX";
        case GateKind::DiagonalPhase: return "DIAGONAL_PHASE";
        case GateKind::PrepZero: return "PREP_ZERO";
        case GateKind::MeasureZ: return "MEASURE_Z";
    }
    return "?";
}

Gate Gate::phase_flip(std::vector<int> qubits, const std::vector<std::uint64_t>& marked) {
    std::vector<std::pair<std::uint64_t, double>> phases;
    phases.reserve(marked.size());
    for (auto m : marked) phases.emplace_back(m, std::numbers::pi);
    return diagonal(std::move(qubits), std::move(phases));
}

namespace detail {

void check_gate(const Gate& g, int num_qubits) {
    const std::size_t want = arity(g.kind);
    if (want != 0 && g.qubits.size() != want)
        throw QsimError(std::string(gate_name(g.kind)) + " expects " + std::to_string(want) + " qubit(s)");
    if (g.kind == GateKind::DiagonalPhase && (g.qubits.empty() || g.qubits.size() > static_cast<std::size_t>(num_qubits)))
        throw QsimError("diagonal phase needs between 1 and num_qubits qubits");
    std::set<int> seen;
    for (int q : g.qubits) {
        if (q < 0 || q >= num_qubits)
            throw QsimError("qubit index " + std::to_string(q) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
        if (!seen.insert(q).second) throw QsimError("gate acts twice on qubit " + std::to_string(q));
    }
    if (g.kind == GateKind::DiagonalPhase) {
        const std::uint64_t local_dim = std::uint64_t{1} << g.qubits.size();
        for (const auto& [local, phase] : g.phases)
            if (local >= local_dim || !std::isfinite(phase)) throw QsimError("diagonal phase entry out of range");
    }
}

}  // namespace detail

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxCircuitQubits) throw QsimError("circuit width out of range");
    touched_.assign(num_qubits, false);
    measured_.assign(num_qubits, false);
}

Circuit& Circuit::add(Gate gate) {
    detail::check_gate(gate, num_qubits_);
    for (int q : gate.qubits) {
        if (gate.kind == GateKind::PrepZero) {
            if (touched_[q]) throw QsimError("preparation after a gate on qubit " + std::to_string(q));
        } else if (gate.kind == GateKind::MeasureZ) {
            if (measured_[q]) throw QsimError("qubit " + std::to_string(q) + " measured twice");
            measured_[q] = true;
        } else {
            if (measured_[q]) throw QsimError("gate after measurement on qubit " + std::to_string(q));
            touched_[q] = true;
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_) throw QsimError("appended circuit is wider");
    for (const Gate& g : other.gates_) add(g);
    return *this;
}

std::string MeasurementHistogram::bitstring(std::uint64_t outcome) const {
    std::string s(static_cast<std::size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; ++q)
        if ((outcome >> q) & 1ULL) s[static_cast<std::size_t>(num_qubits - 1 - q)] = '1';
    return s;
}

std::map<std::string, std::uint64_t> MeasurementHistogram::by_bitstring() const {
    std::map<std::string, std::uint64_t> out;
    for (const auto& [k, v] : counts) out[bitstring(k)] = v;
    return out;
}

std::string_view basis_name(BasisGate g) { return kBasisNames[static_cast<std::size_t>(g)]; }

BasisGate basis_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumBasisGates; ++i)
        if (kBasisNames[i] == name) return static_cast<BasisGate>(i);
    throw QsimError("unknown basis gate '" + std::string(name) + "'");
}

std::uint64_t GateCounts::total() const { return std::accumulate(n.begin(), n.end(), std::uint64_t{0}); }

GateCounts& GateCounts::operator+=(const GateCounts& o) {
    for (std::size_t i = 0; i < kNumBasisGates; ++i) n[i] += o.n[i];
    return *this;
}

GateCounts operator*(std::uint64_t k, GateCounts c) {
    for (auto& v : c.n) v *= k;
    return c;
}

// --- decomposition table ---------------------------------------------------

namespace {

GateCounts parse_counts(const nlohmann::json& obj, const std::string& where) {
    if (!obj.is_object()) throw QsimError("decomposition table: " + where + " must be an object");
    GateCounts c;
    for (const auto& [name, value] : obj.items()) {
        if (!value.is_number_unsigned()) throw QsimError("decomposition table: bad count in " + where);
        c[basis_from_name(name)] = value.get<std::uint64_t>();
    }
    return c;
}

}  // namespace

DecompositionTable DecompositionTable::from_json(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw QsimError(std::string("decomposition table: ") + e.what());
    }
    DecompositionTable t;
    if (!doc.contains("version") || !doc.contains("native") || !doc.contains("mcz_by_controls"))
        throw QsimError("decomposition table: missing version/native/mcz_by_controls");
    t.version_ = doc["version"].get<std::string>();
    for (const auto& [name, rule] : doc["native"].items()) t.native_[name] = parse_counts(rule, name);
    const auto& mcz = doc["mcz_by_controls"];
    if (!mcz.is_array() || mcz.empty()) throw QsimError("decomposition table: mcz_by_controls must be a non-empty array");
    for (std::size_t c = 0; c < mcz.size(); ++c) t.mcz_.push_back(parse_counts(mcz[c], "mcz[" + std::to_string(c) + "]"));
    return t;
}

DecompositionTable DecompositionTable::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw QsimError("cannot open decomposition table " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

const DecompositionTable& DecompositionTable::builtin() {
    static const DecompositionTable table = from_json(kBuiltinDecompositionTable);
    return table;
}

const GateCounts& DecompositionTable::native(std::string_view name) const {
    auto it = native_.find(name);
    if (it == native_.end()) throw QsimError("unsupported gate '" + std::string(name) + "'");
    return it->second;
}

const GateCounts& DecompositionTable::mcz(std::size_t controls) const {
    if (controls >= mcz_.size())
        throw QsimError("no multi-controlled Z entry for " + std::to_string(controls) + " controls");
    return mcz_[controls];
}

GateCounts transpile_counts(const Circuit& circuit, const DecompositionTable& table) {
    GateCounts total;
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::CPhase: {
                const double a = reduce_angle(g.angle);
                if (angle_is(a, 0.0)) break;
                if (angle_is(a, std::numbers::pi)) total += table.native("CZ");
                else if (angle_is(a, std::numbers::pi / 2)) total += table.native("CS");
                else if (angle_is(a, 3 * std::numbers::pi / 2)) total += table.native("CSDG");
                else throw QsimError("unsupported gate: controlled phase angle " + std::to_string(g.angle));
                break;
            }
            case GateKind::DiagonalPhase: {
                const std::size_t width = g.qubits.size();
                const std::size_t controls = width - 1;
                const bool has_spare = static_cast<std::size_t>(circuit.num_qubits()) > width;
                for (const auto& [local, phase] : g.phases) {
                    const double a = reduce_angle(phase);
                    if (angle_is(a, 0.0)) continue;
                    if (!angle_is(a, std::numbers::pi))
                        throw QsimError("unsupported gate: diagonal phase " + std::to_string(phase));
                    if (controls >= 3 && !has_spare)
                        throw QsimError("unsupported gate: " + std::to_string(width) +
                                        "-qubit diagonal phase needs a spare qubit");
                    const auto zeros = static_cast<std::uint64_t>(width - std::popcount(local));
                    total[BasisGate::X] += 2 * zeros;
                    total += table.mcz(controls);
                }
                break;
            }
            default: total += table.native(gate_name(g.kind));
        }
    }
    return total;
}

// --- constructive decompositions -------------------------------------------

namespace {

void append(std::vector<Gate>& out, std::vector<Gate> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// Toffoli network without the two target Hadamards: a doubly-controlled Z.
std::vector<Gate> ccz_gates(int c0, int c1, int t) {
    using K = GateKind;
    return {Gate::cnot(c1, t),        Gate::single(K::Tdg, t), Gate::cnot(c0, t),
            Gate::single(K::T, t),    Gate::cnot(c1, t),       Gate::single(K::Tdg, t),
            Gate::cnot(c0, t),        Gate::single(K::T, c1),  Gate::single(K::T, t),
            Gate::cnot(c0, c1),       Gate::single(K::T, c0),  Gate::single(K::Tdg, c1),
            Gate::cnot(c0, c1)};
}

// k controls, k - 2 dirty ancillas: 4(k - 2) Toffolis.
std::vector<Gate> mcx_linear(const std::vector<int>& c, int t, const std::vector<int>& a) {
    const std::size_t k = c.size();
    std::vector<Gate> out;
    auto top = [&] { out.push_back(Gate::ccx(c[k - 1], a[k - 3], t)); };
    auto ladder = [&] {
        for (std::size_t i = k - 2; i >= 2; --i) out.push_back(Gate::ccx(c[i], a[i - 2], a[i - 1]));
        out.push_back(Gate::ccx(c[0], c[1], a[0]));
        for (std::size_t i = 2; i <= k - 2; ++i) out.push_back(Gate::ccx(c[i], a[i - 2], a[i - 1]));
    };
    for (int rep = 0; rep < 2; ++rep) {
        top();
        ladder();
    }
    return out;
}

}  // namespace

std::vector<Gate> decompose_mcx(const std::vector<int>& controls, int target, const std::vector<int>& spares) {
    const std::size_t k = controls.size();
    if (k == 0) return {Gate::single(GateKind::X, target)};
    if (k == 1) return {Gate::cnot(controls[0], target)};
    if (k == 2) return {Gate::ccx(controls[0], controls[1], target)};
    if (spares.size() >= k - 2)
        return mcx_linear(controls, target, std::vector<int>(spares.begin(), spares.begin() + (k - 2)));
    if (spares.empty())
        throw QsimError("multi-controlled X on " + std::to_string(k) + " controls needs a spare qubit");

    // One borrowed qubit `a`: t ^= AND(B) * (a ^ AND(A)), twice, restores a.
    const int a = spares[0];
    const std::size_t m1 = (k + 1) / 2;
    const std::vector<int> first(controls.begin(), controls.begin() + m1);
    std::vector<int> second(controls.begin() + m1, controls.end());

    std::vector<int> first_spares = second;
    first_spares.push_back(target);
    first_spares.insert(first_spares.end(), spares.begin() + 1, spares.end());
    std::vector<int> second_spares = first;
    second_spares.insert(second_spares.end(), spares.begin() + 1, spares.end());
    second.push_back(a);

    std::vector<Gate> out;
    for (int rep = 0; rep < 2; ++rep) {
        append(out, decompose_mcx(first, a, first_spares));
        append(out, decompose_mcx(second, target, second_spares));
    }
    return out;
}

std::vector<Gate> decompose_mcz(const std::vector<int>& qubits, const std::vector<int>& spares) {
    if (qubits.empty()) throw QsimError("multi-controlled Z needs at least one qubit");
    const int t = qubits.back();
    const std::vector<int> controls(qubits.begin(), qubits.end() - 1);
    switch (controls.size()) {
        case 0: return {Gate::single(GateKind::Z, t)};
        case 1: return {Gate::cz(controls[0], t)};
        case 2: return ccz_gates(controls[0], controls[1], t);
        default: {
            std::vector<Gate> out{Gate::single(GateKind::H, t)};
            append(out, decompose_mcx(controls, t, spares));
            out.push_back(Gate::single(GateKind::H, t));
            return out;
        }
    }
}

std::vector<Gate> expand_to_basis(const Gate& g) {
    using K = GateKind;
    std::vector<Gate> out;
    auto expand_all = [&out](const std::vector<Gate>& gates) {
        for (const Gate& x : gates) append(out, expand_to_basis(x));
    };
    switch (g.kind) {
        case K::Sdg:
            return {Gate::single(K::Z, g.qubits[0]), Gate::single(K::S, g.qubits[0])};
        case K::Tdg:
            return {Gate::single(K::Z, g.qubits[0]), Gate::single(K::S, g.qubits[0]),
                    Gate::single(K::T, g.qubits[0])};
        case K::CZ:
            return {Gate::single(K::H, g.qubits[1]), Gate::cnot(g.qubits[0], g.qubits[1]),
                    Gate::single(K::H, g.qubits[1])};
        case K::CCX: {
            const int t = g.qubits[2];
            std::vector<Gate> net{Gate::single(K::H, t)};
            append(net, ccz_gates(g.qubits[0], g.qubits[1], t));
            net.push_back(Gate::single(K::H, t));
            expand_all(net);
            return out;
        }
        case K::CPhase: {
            const int c = g.qubits[0], t = g.qubits[1];
            const double a = reduce_angle(g.angle);
            if (angle_is(a, 0.0)) return {};
            if (angle_is(a, std::numbers::pi)) return expand_to_basis(Gate::cz(c, t));
            const bool plus = angle_is(a, std::numbers::pi / 2);
            if (!plus && !angle_is(a, 3 * std::numbers::pi / 2))
                throw QsimError("unsupported gate: controlled phase angle " + std::to_string(g.angle));
            const K fwd = plus ? K::T : K::Tdg;
            const K back = plus ? K::Tdg : K::T;
            expand_all({Gate::single(fwd, c), Gate::single(fwd, t), Gate::cnot(c, t), Gate::single(back, t),
                        Gate::cnot(c, t)});
            return out;
        }
        case K::DiagonalPhase: {
            throw QsimError("diagonal phases are expanded per marked string by the caller");
        }
        default: return {g};
    }
}

GateCounts count_basis_gates(const std::vector<Gate>& gates) {
    GateCounts c;
    for (const Gate& g : gates) {
        switch (g.kind) {
            case GateKind::X: ++c[BasisGate::X]; break;
            case GateKind::Y: ++c[BasisGate::Y]; break;
            case GateKind::Z: ++c[BasisGate::Z]; break;
            case GateKind::H: ++c[BasisGate::H]; break;
            case GateKind::S: ++c[BasisGate::S]; break;
            case GateKind::T: ++c[BasisGate::T]; break;
            case GateKind::CNOT: ++c[BasisGate::CNOT]; break;
            case GateKind::SWAP: ++c[BasisGate::SWAP]; break;
            case GateKind::PrepZero: ++c[BasisGate::PrepZero]; break;
            case GateKind::MeasureZ: ++c[BasisGate::MeasZ]; break;
            default: throw QsimError(std::string("not a basis gate: ") + std::string(gate_name(g.kind)));
        }
    }
    return c;
}

}  // namespace qroute
