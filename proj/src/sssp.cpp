#include "qroute/sssp.hpp"

#include <algorithm>
#include <execution>
#include <string>
#include <utility>

namespace qroute {

namespace {

void check_weighted(const LayeredDag& dag, NodeId source) {
    if (source >= dag.num_nodes()) throw SsspError("source node out of range");
    for (const Edge& e : dag.edges()) {
        if (!e.weight) throw SsspError("unweighted edge " + std::to_string(e.from) + "->" + std::to_string(e.to));
        if (!(*e.weight >= 0.0)) throw SsspError("negative or NaN edge weight on " + std::to_string(e.from) +
                                                 "->" + std::to_string(e.to));
    }
}

SsspReport init_report(const LayeredDag& dag, NodeId source) {
    SsspReport r;
    r.source = source;
    r.dist.assign(dag.num_nodes(), kUnreached);
    r.pred.assign(dag.num_nodes(), std::nullopt);
    r.dist[source] = 0.0;
    return r;
}

// Runs the Dijkstra loop with a pluggable extraction. `pick` receives the
// queue (node ids ascending) and returns the position to extract, or
// queue.size() when only infinite keys remain.
template <typename Pick>
SsspReport run(const LayeredDag& dag, NodeId source, RelaxPolicy policy, Pick&& pick) {
    check_weighted(dag, source);
    SsspReport r = init_report(dag, source);
    std::vector<bool> settled(dag.num_nodes(), false);
    std::vector<NodeId> queue(dag.num_nodes());
    for (NodeId v = 0; v < queue.size(); ++v) queue[v] = v;

    while (!queue.empty()) {
        const std::size_t at = pick(queue, r);
        if (at >= queue.size()) break;
        const NodeId u = queue[at];
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(at));
        settled[u] = true;
        r.extraction_order.push_back(u);
        r.relaxations += parallel_relax(u, dag.out_edges(u), r.dist, r.pred, settled, policy);
    }
    return r;
}

}  // namespace

std::size_t parallel_relax(NodeId u, std::span<const Edge> out_edges, std::span<double> dist, PredMap& pred,
                           const std::vector<bool>& settled, RelaxPolicy policy) {
    const double base = dist[u];
    auto relax_one = [&](const Edge& e) -> std::size_t {
        const NodeId v = e.to;
        if (settled[v]) return 0;
        const double alt = base + *e.weight;
        if (alt < dist[v]) {
            dist[v] = alt;
            pred[v] = u;
            return 1;
        }
        return 0;
    };
    if (policy == RelaxPolicy::Parallel)
        return std::transform_reduce(std::execution::par, out_edges.begin(), out_edges.end(), std::size_t{0},
                                     std::plus<>{}, relax_one);
    std::size_t updated = 0;
    for (const Edge& e : out_edges) updated += relax_one(e);
    return updated;
}

SsspReport dijkstra_classical(const LayeredDag& dag, NodeId source) {
    std::uint64_t comparisons = 0;
    auto pick = [&comparisons](const std::vector<NodeId>& queue, const SsspReport& r) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < queue.size(); ++i) {
            ++comparisons;
            if (r.dist[queue[i]] < r.dist[queue[best]]) best = i;
        }
        return r.dist[queue[best]] == kUnreached ? queue.size() : best;
    };
    SsspReport r = run(dag, source, RelaxPolicy::Sequential, pick);
    r.scan_comparisons = comparisons;
    return r;
}

SsspReport dijkstra_quantum(const LayeredDag& dag, NodeId source, const QuantumDijkstraConfig& config) {
    QmfStats total;
    total.shots_per_round = config.qmf.shots_per_round;
    std::vector<ExtractionSample> trace;
    std::uint64_t extraction = 0;

    auto pick = [&](const std::vector<NodeId>& queue, const SsspReport& r) {
        std::vector<std::size_t> positions;
        std::vector<std::pair<double, NodeId>> keys;
        for (std::size_t i = 0; i < queue.size(); ++i)
            if (r.dist[queue[i]] != kUnreached) {
                positions.push_back(i);
                keys.emplace_back(r.dist[queue[i]], queue[i]);
            }
        const std::uint64_t call = extraction++;
        if (keys.empty()) return queue.size();
        if (keys.size() == 1) return positions.front();
        if (keys.size() > kMaxQmfInput) throw SsspError("queue exceeds the simulator's search space");
        const auto res = quantum_minimum(std::span<const std::pair<double, NodeId>>(keys),
                                         mix_seed(config.seed, call), config.qmf);
        total += res.stats;
        trace.push_back({keys.size(), res.stats.outer_rounds, res.stats.oracle_invocations,
                         res.stats.grover_iterations_total, res.stats.measurements, res.verified,
                         keys[res.min_index].second});
        return positions[res.min_index];
    };
    SsspReport r = run(dag, source, config.relax, pick);
    r.qmf_stats = total;
    r.qmf_trace = std::move(trace);
    return r;
}

std::vector<NodeId> extract_path(const PredMap& pred, NodeId source, NodeId target) {
    if (target >= pred.size()) throw SsspError("target node out of range");
    std::vector<NodeId> path{target};
    NodeId v = target;
    while (v != source) {
        if (!pred[v]) throw SsspError("node " + std::to_string(target) + " is unreachable");
        v = *pred[v];
        path.push_back(v);
        if (path.size() > pred.size()) throw SsspError("predecessor cycle");
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<NodeId> extract_path(const SsspReport& report, NodeId target) {
    return extract_path(report.pred, report.source, target);
}

double path_weight(const LayeredDag& dag, std::span<const NodeId> path) {
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const auto out = dag.out_edges(path[i - 1]);
        auto it = std::find_if(out.begin(), out.end(), [&](const Edge& e) { return e.to == path[i]; });
        if (it == out.end() || !it->weight) throw SsspError("path uses a missing or unweighted edge");
        total += *it->weight;
    }
    return total;
}

}  // namespace qroute
