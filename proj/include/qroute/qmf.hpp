#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qroute/qsim.hpp"
#include "qroute/random.hpp"

namespace qroute {

class QmfError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxQmfInput = std::size_t{1} << kMaxQubits;

struct QmfConfig {
    std::uint64_t shots_per_round = 64;
    std::size_t max_rounds = 512;  // Grover rounds across all restarts
    bool verify = false;
    /// Table used to count round circuits; null selects the built-in one.
    const DecompositionTable* decomposition = nullptr;
};

struct QmfStats {
    std::uint64_t oracle_invocations = 0;
    std::uint64_t grover_iterations_total = 0;
    std::uint64_t measurements = 0;
    std::uint64_t outer_rounds = 0;
    std::uint64_t shots_per_round = 0;
    std::uint64_t restarts = 0;
    std::uint64_t calls = 0;
    /// Basis gates of every executed round circuit, each counted once.
    GateCounts gate_counts;

    QmfStats& operator+=(const QmfStats& o);
};

template <typename T>
struct QmfResult {
    std::size_t size = 0;
    std::size_t min_index = 0;
    T min_value{};
    QmfStats stats;
    bool verified = false;
};

/// Index-register width ceil(log2 N), at least 1.
int index_qubits(std::size_t n);

/// Indices i with values[i] < values[threshold]. These get the phase flip.
template <typename T>
std::vector<std::uint64_t> marked_indices(std::span<const T> values, std::size_t threshold) {
    if (threshold >= values.size()) throw QmfError("threshold index out of range");
    std::vector<std::uint64_t> marked;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] < values[threshold]) marked.push_back(i);
    return marked;
}

/// Phase oracle over the index register (qubits 0..n-1) flipping the sign of
/// every index whose value lies strictly below values[threshold]. Padding
/// indices >= values.size() are never marked.
template <typename T>
Gate build_phase_oracle(std::span<const T> values, std::size_t threshold) {
    if (values.size() < 2) throw QmfError("oracle needs at least 2 values");
    std::vector<int> qubits(static_cast<std::size_t>(index_qubits(values.size())));
    for (std::size_t q = 0; q < qubits.size(); ++q) qubits[q] = static_cast<int>(q);
    return Gate::phase_flip(std::move(qubits), marked_indices(values, threshold));
}

/// floor(pi/4 * sqrt(N / M)); M = 0 is an error (nothing to amplify).
std::size_t grover_iterations(std::size_t n, std::size_t m);

/// Reflection about the mean, a_i -> 2 * mean(a) - a_i.
template <typename Scalar>
void diffusion(BasicStateVector<Scalar>& s) {
    auto& a = s.amplitudes();
    const auto mean = a.mean();
    a = (-a.array() + Scalar(2) * mean).matrix();
}

template <typename Scalar>
BasicStateVector<Scalar> diffused(BasicStateVector<Scalar> s) {
    diffusion(s);
    return s;
}

/// One Grover round: |0> prep, H on the index register, `iterations` x
/// (oracle, diffusion), Z measurement of the index register. With
/// `workspace`, the register carries the extra qubit of ceil(log2 N) + 1.
/// The diffusion is H^n . flip(|0..0>) . H^n, which equals the reflection
/// about the mean up to a global sign.
Circuit grover_round_circuit(const std::vector<std::uint64_t>& marked, int index_qubits,
                             std::size_t iterations, bool workspace);

/// Outcome with the most shots among indices < limit; lowest index on ties.
/// Returns limit when every shot landed on padding.
std::uint64_t most_common_outcome(const MeasurementHistogram& h, std::uint64_t limit);

/// Probability mass of the listed basis states.
template <typename Scalar>
double marked_probability(const BasicStateVector<Scalar>& s, const std::vector<std::uint64_t>& marked) {
    double p = 0.0;
    for (auto i : marked) p += static_cast<double>(s.probability(i));
    return p;
}

/// Threshold-descent minimum finding. Starts from a random guess; each round
/// flips the phase of entries below the guess, runs the scheduled Grover
/// iterations on a simulated register, samples `shots_per_round` shots and
/// moves to the most common outcome if it is strictly smaller, else stops.
/// With verify, a linear scan confirms the result and a failed check
/// restarts from a fresh random guess. T needs a strict weak order via <.
template <typename T>
QmfResult<T> quantum_minimum(std::span<const T> values, std::uint64_t seed, const QmfConfig& config = {}) {
    const std::size_t n = values.size();
    if (n == 0) throw QmfError("quantum minimum of an empty list");
    if (n < 2) throw QmfError("quantum minimum needs at least 2 values");
    if (n > kMaxQmfInput) throw QmfError("quantum minimum input exceeds " + std::to_string(kMaxQmfInput));
    if (config.shots_per_round == 0) throw QmfError("shots_per_round must be positive");

    const int width = index_qubits(n);
    const std::size_t search_space = std::size_t{1} << width;
    Rng rng(seed);

    QmfResult<T> result;
    result.size = n;
    result.stats.calls = 1;
    result.stats.shots_per_round = config.shots_per_round;

    std::size_t guess = uniform_index(rng, n);
    bool exhausted = false;
    for (;;) {
        for (;;) {
            const auto marked = marked_indices(values, guess);
            if (marked.empty()) break;
            if (result.stats.outer_rounds >= config.max_rounds) {
                exhausted = true;
                break;
            }
            const std::size_t k = grover_iterations(search_space, marked.size());
            ++result.stats.outer_rounds;
            result.stats.oracle_invocations += k;
            result.stats.grover_iterations_total += k;
            result.stats.measurements += config.shots_per_round;
            result.stats.gate_counts += transpile_counts(
                grover_round_circuit(marked, width, k, true),
                config.decomposition ? *config.decomposition : DecompositionTable::builtin());

            const auto state = simulate(grover_round_circuit(marked, width, k, false));
            const auto hist = measure_all(state, config.shots_per_round, rng());
            const auto next = most_common_outcome(hist, n);
            if (next < n && values[next] < values[guess])
                guess = next;
            else
                break;
        }
        if (!config.verify || exhausted) break;
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i) minimal = !(values[i] < values[guess]);
        if (minimal) {
            result.verified = true;
            break;
        }
        ++result.stats.restarts;
        guess = uniform_index(rng, n);
    }
    if (config.verify && !result.verified)
        throw QmfError("quantum minimum: round budget of " + std::to_string(config.max_rounds) +
                       " exhausted without a verified minimum");

    result.min_index = guess;
    result.min_value = values[guess];
    return result;
}

template <typename T>
QmfResult<T> quantum_minimum(const std::vector<T>& values, std::uint64_t seed, const QmfConfig& config = {}) {
    return quantum_minimum(std::span<const T>(values), seed, config);
}

}  // namespace qroute
