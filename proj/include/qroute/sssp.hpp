#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qroute/mesh_grid.hpp"
#include "qroute/qmf.hpp"

namespace qroute {

class SsspError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kUnreached = std::numeric_limits<double>::infinity();

using DistMap = std::vector<double>;
using PredMap = std::vector<std::optional<NodeId>>;

/// One quantum minimum extraction.
struct ExtractionSample {
    std::size_t queue_size = 0;  // finite-key entries searched
    std::uint64_t rounds = 0;
    std::uint64_t oracle_invocations = 0;
    std::uint64_t iterations = 0;
    std::uint64_t shots = 0;
    bool verified = false;
    NodeId extracted = 0;
};

struct SsspReport {
    NodeId source = 0;
    DistMap dist;
    PredMap pred;
    std::vector<NodeId> extraction_order;
    std::uint64_t scan_comparisons = 0;  // classical minimum scans
    std::uint64_t relaxations = 0;       // successful distance updates
    std::optional<QmfStats> qmf_stats;
    std::vector<ExtractionSample> qmf_trace;
};

enum class RelaxPolicy { Sequential, Parallel };

/// Relaxes every out-edge of the finalized node u: if dist[u] + w < dist[v]
/// for an unsettled v, sets dist[v] and pred[v]. The targets of one node's
/// out-edges must be pairwise distinct (true for any LayeredDag), which makes
/// the parallel policy write-disjoint and equal to the sequential result.
/// Returns the number of updated targets.
std::size_t parallel_relax(NodeId u, std::span<const Edge> out_edges, std::span<double> dist, PredMap& pred,
                           const std::vector<bool>& settled, RelaxPolicy policy = RelaxPolicy::Parallel);

/// Dijkstra with the queue held as an unsorted array; the minimum scan breaks
/// ties by lowest node id. Stops once every remaining key is infinite.
SsspReport dijkstra_classical(const LayeredDag& dag, NodeId source);

struct QuantumDijkstraConfig {
    QmfConfig qmf{64, 512, true};
    std::uint64_t seed = 0;
    RelaxPolicy relax = RelaxPolicy::Parallel;
};

/// Dijkstra whose minimum extraction runs quantum minimum finding over the
/// finite-key queue entries, keyed by (distance, node id). A queue holding a
/// single finite key is taken directly. With qmf.verify = false extractions
/// may be non-minimal and distances suboptimal.
SsspReport dijkstra_quantum(const LayeredDag& dag, NodeId source, const QuantumDijkstraConfig& config = {});

/// Node sequence source..target along predecessors.
std::vector<NodeId> extract_path(const PredMap& pred, NodeId source, NodeId target);
std::vector<NodeId> extract_path(const SsspReport& report, NodeId target);

/// Sum of edge weights along a node path, looked up in the DAG.
double path_weight(const LayeredDag& dag, std::span<const NodeId> path);

}  // namespace qroute
