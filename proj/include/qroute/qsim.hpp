#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qroute/random.hpp"

namespace qroute {

class QsimError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxQubits = 12;

/// Dense pure state on n <= 12 qubits. Qubit q is bit q of the basis index.
template <typename Scalar>
class BasicStateVector {
  public:
    using Complex = std::complex<Scalar>;
    using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    explicit BasicStateVector(int num_qubits, std::uint64_t basis_index = 0)
        : num_qubits_(checked(num_qubits)), amps_(Amplitudes::Zero(Eigen::Index(1) << num_qubits)) {
        if (basis_index >= dim()) throw QsimError("basis index out of range");
        amps_[static_cast<Eigen::Index>(basis_index)] = Complex(1);
    }

    BasicStateVector(int num_qubits, Amplitudes amplitudes)
        : num_qubits_(checked(num_qubits)), amps_(std::move(amplitudes)) {
        if (static_cast<std::uint64_t>(amps_.size()) != dim())
            throw QsimError("amplitude count does not match qubit count");
    }

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }

    const Amplitudes& amplitudes() const { return amps_; }
    Amplitudes& amplitudes() { return amps_; }
    Complex operator[](std::uint64_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

    Scalar norm() const { return amps_.norm(); }
    bool is_normalized(Scalar tol = Scalar(1e-10)) const {
        using std::abs;
        return abs(amps_.squaredNorm() - Scalar(1)) <= tol;
    }
    Scalar probability(std::uint64_t i) const { return std::norm(amps_[static_cast<Eigen::Index>(i)]); }

  private:
    static int checked(int n) {
        if (n < 1 || n > kMaxQubits)
            throw QsimError("qubit count must lie in [1, " + std::to_string(kMaxQubits) + "]");
        return n;
    }

    int num_qubits_;
    Amplitudes amps_;
};

using StateVector = BasicStateVector<double>;

template <typename Scalar = double>
BasicStateVector<Scalar> uniform_superposition(int num_qubits) {
    BasicStateVector<Scalar> s(num_qubits);
    const Scalar a = Scalar(1) / std::sqrt(static_cast<Scalar>(s.dim()));
    s.amplitudes().setConstant(typename BasicStateVector<Scalar>::Complex(a));
    return s;
}

enum class GateKind {
    X, Y, Z, H, S, Sdg, T, Tdg,
    CNOT, CZ, SWAP, CPhase, CCX,
    DiagonalPhase,
    PrepZero, MeasureZ,
};

std::string_view gate_name(GateKind kind);

/// One gate application. Qubit roles: single-qubit gates use qubits[0];
/// CNOT/CZ/CPhase are (control, target); CCX is (c0, c1, target); a diagonal
/// phase multiplies basis states whose bits on `qubits` (qubits[k] is bit k
/// of the local index) equal a listed index by exp(i * phase).
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> qubits;
    double angle = 0.0;
    std::vector<std::pair<std::uint64_t, double>> phases;

    static Gate single(GateKind kind, int q) { return {kind, {q}, 0.0, {}}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, {c, t}, 0.0, {}}; }
    static Gate cz(int c, int t) { return {GateKind::CZ, {c, t}, 0.0, {}}; }
    static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}, 0.0, {}}; }
    static Gate cphase(int c, int t, double angle) { return {GateKind::CPhase, {c, t}, angle, {}}; }
    static Gate ccx(int c0, int c1, int t) { return {GateKind::CCX, {c0, c1, t}, 0.0, {}}; }
    static Gate diagonal(std::vector<int> qubits, std::vector<std::pair<std::uint64_t, double>> phases) {
        return {GateKind::DiagonalPhase, std::move(qubits), 0.0, std::move(phases)};
    }
    /// Sign flip (phase pi) on each listed local basis index.
    static Gate phase_flip(std::vector<int> qubits, const std::vector<std::uint64_t>& marked);

    bool is_unitary() const { return kind != GateKind::PrepZero && kind != GateKind::MeasureZ; }
};

/// Ordered gate list. Preparations must precede and measurements follow every
/// unitary on their qubit.
class Circuit {
  public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    Circuit& add(Gate gate);
    Circuit& append(const Circuit& other);

  private:
    int num_qubits_;
    std::vector<Gate> gates_;
    std::vector<bool> touched_;
    std::vector<bool> measured_;
};

namespace detail {

void check_gate(const Gate& gate, int num_qubits);

inline std::uint64_t gather_bits(std::uint64_t index, const std::vector<int>& qubits) {
    std::uint64_t local = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) local |= ((index >> qubits[k]) & 1ULL) << k;
    return local;
}

template <typename Scalar, typename F>
void for_each_pair(BasicStateVector<Scalar>& s, int q, F&& f) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    auto& a = s.amplitudes();
    for (std::uint64_t i = 0; i < s.dim(); ++i)
        if (!(i & bit)) f(a[static_cast<Eigen::Index>(i)], a[static_cast<Eigen::Index>(i | bit)]);
}

}  // namespace detail

/// Applies one unitary gate in place. Preparation and measurement markers are rejected.
template <typename Scalar>
void apply_gate(BasicStateVector<Scalar>& s, const Gate& g) {
    using C = std::complex<Scalar>;
    detail::check_gate(g, s.num_qubits());
    auto& a = s.amplitudes();
    const auto idx = [](std::uint64_t i) { return static_cast<Eigen::Index>(i); };
    const Scalar rsqrt2 = Scalar(1) / std::sqrt(Scalar(2));
    const C i_unit(0, 1);

    auto phase_on_one = [&](int q, C factor) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        for (std::uint64_t i = 0; i < s.dim(); ++i)
            if (i & bit) a[idx(i)] *= factor;
    };

    switch (g.kind) {
        case GateKind::X:
            detail::for_each_pair(s, g.qubits[0], [](C& lo, C& hi) { std::swap(lo, hi); });
            break;
        case GateKind::Y:
            detail::for_each_pair(s, g.qubits[0], [&](C& lo, C& hi) {
                const C l = lo;
                lo = -i_unit * hi;
                hi = i_unit * l;
            });
            break;
        case GateKind::Z: phase_on_one(g.qubits[0], C(-1)); break;
        case GateKind::S: phase_on_one(g.qubits[0], i_unit); break;
        case GateKind::Sdg: phase_on_one(g.qubits[0], -i_unit); break;
        case GateKind::T: phase_on_one(g.qubits[0], std::polar(Scalar(1), Scalar(std::numbers::pi / 4))); break;
        case GateKind::Tdg: phase_on_one(g.qubits[0], std::polar(Scalar(1), Scalar(-std::numbers::pi / 4))); break;
        case GateKind::H:
            detail::for_each_pair(s, g.qubits[0], [&](C& lo, C& hi) {
                const C l = lo;
                lo = rsqrt2 * (l + hi);
                hi = rsqrt2 * (l - hi);
            });
            break;
        case GateKind::CNOT: {
            const std::uint64_t cbit = std::uint64_t{1} << g.qubits[0];
            const std::uint64_t tbit = std::uint64_t{1} << g.qubits[1];
            for (std::uint64_t i = 0; i < s.dim(); ++i)
                if ((i & cbit) && !(i & tbit)) std::swap(a[idx(i)], a[idx(i | tbit)]);
            break;
        }
        case GateKind::CCX: {
            const std::uint64_t cbits = (std::uint64_t{1} << g.qubits[0]) | (std::uint64_t{1} << g.qubits[1]);
            const std::uint64_t tbit = std::uint64_t{1} << g.qubits[2];
            for (std::uint64_t i = 0; i < s.dim(); ++i)
                if ((i & cbits) == cbits && !(i & tbit)) std::swap(a[idx(i)], a[idx(i | tbit)]);
            break;
        }
        case GateKind::CZ:
        case GateKind::CPhase: {
            const double angle = g.kind == GateKind::CZ ? std::numbers::pi : g.angle;
            const C factor = std::polar(Scalar(1), Scalar(angle));
            const std::uint64_t bits = (std::uint64_t{1} << g.qubits[0]) | (std::uint64_t{1} << g.qubits[1]);
            for (std::uint64_t i = 0; i < s.dim(); ++i)
                if ((i & bits) == bits) a[idx(i)] *= factor;
            break;
        }
        case GateKind::SWAP: {
            const std::uint64_t b0 = std::uint64_t{1} << g.qubits[0];
            const std::uint64_t b1 = std::uint64_t{1} << g.qubits[1];
            for (std::uint64_t i = 0; i < s.dim(); ++i)
                if ((i & b0) && !(i & b1)) std::swap(a[idx(i)], a[idx((i & ~b0) | b1)]);
            break;
        }
        case GateKind::DiagonalPhase: {
            std::vector<C> factor(std::size_t{1} << g.qubits.size(), C(1));
            for (const auto& [local, phase] : g.phases) factor[local] *= std::polar(Scalar(1), Scalar(phase));
            for (std::uint64_t i = 0; i < s.dim(); ++i) a[idx(i)] *= factor[detail::gather_bits(i, g.qubits)];
            break;
        }
        case GateKind::PrepZero:
        case GateKind::MeasureZ:
            throw QsimError("non-unitary marker passed to apply_gate");
    }
}

/// Runs the circuit's unitary part from |0...0>. Preparation and measurement
/// markers are skipped: the register starts in |0...0> and sampling is done by measure_all.
template <typename Scalar = double>
BasicStateVector<Scalar> simulate(const Circuit& c) {
    BasicStateVector<Scalar> s(c.num_qubits());
    for (const Gate& g : c.gates())
        if (g.is_unitary()) apply_gate(s, g);
    return s;
}

template <typename Scalar = double>
void simulate_into(BasicStateVector<Scalar>& s, const Circuit& c) {
    if (c.num_qubits() != s.num_qubits()) throw QsimError("circuit width does not match the state");
    for (const Gate& g : c.gates())
        if (g.is_unitary()) apply_gate(s, g);
}

struct MeasurementHistogram {
    int num_qubits = 0;
    std::uint64_t shots = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // outcome index -> shots

    /// Outcome as a bit string, qubit n-1 first and qubit 0 last.
    std::string bitstring(std::uint64_t outcome) const;
    std::map<std::string, std::uint64_t> by_bitstring() const;
};

/// Draws `shots` i.i.d. outcomes from |amplitude|^2.
template <typename Scalar>
MeasurementHistogram measure_all(const BasicStateVector<Scalar>& s, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw QsimError("measurement needs at least one shot");
    std::vector<double> cumulative(s.dim());
    double acc = 0.0;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        acc += static_cast<double>(s.probability(i));
        cumulative[i] = acc;
    }
    MeasurementHistogram h{s.num_qubits(), shots, {}};
    Rng rng(seed);
    for (std::uint64_t k = 0; k < shots; ++k) {
        const double u = uniform01(rng) * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        ++h.counts[static_cast<std::uint64_t>(it - cumulative.begin())];
    }
    return h;
}

// ---------------------------------------------------------------------------
// Gate counting in the basis {CNOT, SWAP, H, |+> prep, |0> prep, X meas,
// Z meas, X, Y, Z, S, T}.

enum class BasisGate : std::size_t { CNOT, SWAP, H, PrepPlus, PrepZero, MeasX, MeasZ, X, Y, Z, S, T };
inline constexpr std::size_t kNumBasisGates = 12;

std::string_view basis_name(BasisGate g);
BasisGate basis_from_name(std::string_view name);  // throws QsimError

struct GateCounts {
    std::array<std::uint64_t, kNumBasisGates> n{};

    std::uint64_t& operator[](BasisGate g) { return n[static_cast<std::size_t>(g)]; }
    std::uint64_t operator[](BasisGate g) const { return n[static_cast<std::size_t>(g)]; }
    std::uint64_t total() const;
    bool empty() const { return total() == 0; }

    GateCounts& operator+=(const GateCounts& o);
    friend GateCounts operator+(GateCounts a, const GateCounts& b) { return a += b; }
    friend GateCounts operator*(std::uint64_t k, GateCounts c);
    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Native gate -> basis expansion, loaded from a versioned JSON document.
/// Multi-controlled Z costs are tabulated per control count and assume one
/// spare qubit in the register to borrow as a dirty ancilla once c >= 3.
class DecompositionTable {
  public:
    static DecompositionTable from_json(std::string_view document);
    static DecompositionTable from_file(const std::filesystem::path& path);
    /// The table shipped in data/decomposition_table.json, compiled in.
    static const DecompositionTable& builtin();

    const std::string& version() const { return version_; }
    const GateCounts& native(std::string_view name) const;  // throws QsimError if absent
    const GateCounts& mcz(std::size_t controls) const;       // throws QsimError if absent
    std::size_t max_mcz_controls() const { return mcz_.size() - 1; }

  private:
    std::string version_;
    std::map<std::string, GateCounts, std::less<>> native_;
    std::vector<GateCounts> mcz_;
};

/// Basis-gate totals for the circuit. Throws QsimError on gates the table
/// cannot express (arbitrary-angle phases, wide diagonals without a spare qubit).
GateCounts transpile_counts(const Circuit& circuit,
                            const DecompositionTable& table = DecompositionTable::builtin());

}  // namespace qroute

namespace qroute {

// ---------------------------------------------------------------------------
// Constructive decompositions. These produce the circuits whose basis counts
// the decomposition table records, so the table can be audited by simulation.

/// Multi-controlled X. k <= 2 is native; otherwise Toffoli ladders borrowing
/// `spares` as dirty ancillas (k - 2 spares: linear ladder; one spare: split
/// into two halves that borrow each other). Throws if k >= 3 and no spare.
std::vector<Gate> decompose_mcx(const std::vector<int>& controls, int target,
                                const std::vector<int>& spares);

/// Z on |1...1> of `qubits` (last entry is the target), via decompose_mcx for >= 3 controls.
std::vector<Gate> decompose_mcz(const std::vector<int>& qubits, const std::vector<int>& spares);

/// Rewrites a gate into basis gates only (X, Y, Z, H, S, T, CNOT, SWAP and the
/// prep/measure markers). Exact, including global phase.
std::vector<Gate> expand_to_basis(const Gate& gate);

/// Counts a gate list that already consists of basis gates.
GateCounts count_basis_gates(const std::vector<Gate>& gates);

}  // namespace qroute
