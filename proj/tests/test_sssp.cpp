#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>

#include "qroute/sssp.hpp"

using namespace qroute;

namespace {

LayeredDag diamond() {
    std::vector<Waypoint> coords(4);
    std::vector<Edge> edges{{0, 1, 1.0}, {0, 2, 4.0}, {1, 3, 2.0}, {2, 3, 1.0}};
    return LayeredDag({{0}, {1, 2}, {3}}, coords, edges);
}

// Random complete-bipartite layered DAG with integer-valued weights (so
// path sums are exact and ties occur).
LayeredDag random_dag(Rng& rng, std::size_t layers, std::size_t width, int max_weight) {
    std::vector<std::vector<NodeId>> ids;
    NodeId next = 0;
    for (std::size_t l = 0; l < layers; ++l) {
        const std::size_t w = (l == 0 || l + 1 == layers) ? 1 : width;
        ids.emplace_back();
        for (std::size_t k = 0; k < w; ++k) ids.back().push_back(next++);
    }
    std::vector<Edge> edges;
    for (std::size_t l = 0; l + 1 < layers; ++l)
        for (NodeId u : ids[l])
            for (NodeId v : ids[l + 1])
                edges.push_back({u, v, static_cast<double>(uniform_index(rng, static_cast<std::uint64_t>(max_weight)))});
    return LayeredDag(ids, std::vector<Waypoint>(next), edges);
}

// Shortest distance to every node by enumerating all paths from the source.
std::vector<double> brute_force(const LayeredDag& dag) {
    std::vector<double> best(dag.num_nodes(), std::numeric_limits<double>::infinity());
    std::function<void(NodeId, double)> walk = [&](NodeId u, double d) {
        best[u] = std::min(best[u], d);
        for (const Edge& e : dag.out_edges(u)) walk(e.to, d + *e.weight);
    };
    walk(dag.source(), 0.0);
    return best;
}

}  // namespace

TEST_CASE("diamond graph") {
    const LayeredDag g = diamond();
    const auto c = dijkstra_classical(g, 0);
    CHECK(c.dist[3] == 3.0);
    CHECK(extract_path(c, 3) == std::vector<NodeId>{0, 1, 3});
    CHECK(extract_path(c, 0) == std::vector<NodeId>{0});
    CHECK(path_weight(g, extract_path(c, 3)) == 3.0);
    CHECK(c.extraction_order == std::vector<NodeId>{0, 1, 3, 2});

    const auto q = dijkstra_quantum(g, 0, {{64, 512, true}, 9, RelaxPolicy::Parallel});
    CHECK(q.dist == c.dist);
    CHECK(q.pred == c.pred);
    CHECK(q.extraction_order == c.extraction_order);
    REQUIRE(q.qmf_stats);
}

TEST_CASE("single finite key is extracted without a quantum call") {
    // A chain: the queue never holds more than one finite key.
    std::vector<Edge> edges{{0, 1, 1.0}, {1, 2, 2.0}};
    const LayeredDag chain({{0}, {1}, {2}}, std::vector<Waypoint>(3), edges);
    const auto q = dijkstra_quantum(chain, 0);
    CHECK(q.dist[2] == 3.0);
    CHECK(q.qmf_stats->calls == 0);
    CHECK(q.qmf_trace.empty());
}

TEST_CASE("unreachable nodes and bad inputs") {
    const LayeredDag g = diamond();
    const auto from_b = dijkstra_classical(g, 2);
    CHECK(from_b.dist[3] == 1.0);
    CHECK(from_b.dist[0] == kUnreached);
    CHECK(from_b.dist[1] == kUnreached);
    CHECK(from_b.extraction_order == std::vector<NodeId>{2, 3});
    CHECK_THROWS_AS(extract_path(from_b, 0), SsspError);
    CHECK_THROWS_AS(dijkstra_classical(g, 9), SsspError);

    std::vector<Waypoint> coords(4);
    const LayeredDag unweighted({{0}, {1, 2}, {3}}, coords, {{0, 1, {}}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
    CHECK_THROWS_AS(dijkstra_classical(unweighted, 0), SsspError);
    const LayeredDag negative({{0}, {1, 2}, {3}}, coords, {{0, 1, -1.0}, {0, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
    CHECK_THROWS_AS(dijkstra_quantum(negative, 0), SsspError);
}

TEST_CASE("classical and quantum agree with path enumeration on random grids") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t layers = 3 + uniform_index(rng, 6);
        const std::size_t width = 1 + uniform_index(rng, 4);
        const LayeredDag dag = random_dag(rng, layers, width, trial % 2 ? 5 : 1000);
        const auto truth = brute_force(dag);
        const auto c = dijkstra_classical(dag, dag.source());
        CHECK(c.dist == truth);
        const auto q = dijkstra_quantum(dag, dag.source(), {{32, 512, true}, static_cast<std::uint64_t>(trial), RelaxPolicy::Parallel});
        CHECK(q.dist == c.dist);
        CHECK(q.pred == c.pred);
        const auto path = extract_path(c, dag.sink());
        CHECK(path.size() == layers);
        CHECK(path_weight(dag, path) == c.dist[dag.sink()]);

        for (std::size_t i = 1; i < c.extraction_order.size(); ++i)
            CHECK(c.dist[c.extraction_order[i - 1]] <= c.dist[c.extraction_order[i]]);
    }
}

TEST_CASE("classical scan comparisons grow quadratically") {
    Rng rng(1);
    const LayeredDag dag = random_dag(rng, 10, 5, 100);
    const auto c = dijkstra_classical(dag, dag.source());
    const std::uint64_t v = dag.num_nodes();
    CHECK(c.scan_comparisons == v * (v - 1) / 2);
}

TEST_CASE("parallel_relax") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = uniform_index(rng, 8);
        std::vector<Edge> out;
        for (std::size_t i = 0; i < k; ++i) out.push_back({0, static_cast<NodeId>(i + 1), uniform01(rng) * 10.0});
        std::vector<double> dist(k + 1);
        dist[0] = uniform01(rng) * 5.0;
        for (std::size_t i = 1; i <= k; ++i) dist[i] = uniform_index(rng, 3) == 0 ? kUnreached : uniform01(rng) * 15.0;
        std::vector<bool> settled(k + 1, false);
        settled[0] = true;
        for (std::size_t i = 1; i <= k; ++i) settled[i] = uniform_index(rng, 5) == 0;

        auto d_seq = dist, d_par = dist;
        PredMap p_seq(k + 1), p_par(k + 1);
        const auto n_seq = parallel_relax(0, out, d_seq, p_seq, settled, RelaxPolicy::Sequential);
        const auto n_par = parallel_relax(0, out, d_par, p_par, settled, RelaxPolicy::Parallel);
        CHECK(n_seq == n_par);
        CHECK(d_seq == d_par);
        CHECK(p_seq == p_par);
        for (std::size_t i = 0; i <= k; ++i) CHECK(d_seq[i] <= dist[i]);
    }

    std::vector<double> dist{0.0};
    PredMap pred(1);
    CHECK(parallel_relax(0, {}, dist, pred, {true}) == 0);
}
