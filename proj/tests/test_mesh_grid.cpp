#include <doctest.h>

#include <functional>

#include "qroute/mesh_grid.hpp"
#include "qroute/random.hpp"

using namespace qroute;

namespace {

Path straight_path(std::size_t n) {
    Path p;
    for (std::size_t i = 0; i < n; ++i) p.push_back({40.0, -75.0 + static_cast<double>(i) * 0.5, 30000.0});
    p.front().alt_ft = 0.0;
    p.back().alt_ft = 0.0;
    return p;
}

LayeredDag grid(std::size_t layers, std::size_t copies, std::uint64_t seed = 1) {
    const Path p = straight_path(layers);
    PerturbationSpec spec;
    spec.copies = copies;
    spec.seed = seed;
    return build_dag(p, copies == 0 ? std::vector<Path>{} : perturb_route(p, spec));
}

}  // namespace

TEST_CASE("altitude profile") {
    const AltitudeProfile p{0.15, 0.85, 35000.0};
    CHECK(altitude_at(p, 0.0) == 0.0);
    CHECK(altitude_at(p, 1.0) == doctest::Approx(0.0));
    CHECK(altitude_at(p, 0.5) == 35000.0);
    CHECK(altitude_at(p, 0.15) == doctest::Approx(35000.0));
    CHECK(altitude_at(p, 0.075) == doctest::Approx(17500.0));
    CHECK(altitude_at(p, 0.925) == doctest::Approx(17500.0));
    CHECK_THROWS_AS(altitude_at(p, -0.1), GridError);
    CHECK_THROWS_AS(altitude_at(p, 1.5), GridError);
    CHECK_THROWS_AS(validate(AltitudeProfile{0.6, 0.85, 1.0}), GridError);
    CHECK_THROWS_AS(validate(AltitudeProfile{0.1, 0.4, 1.0}), GridError);

    const Path applied = apply_altitude_profile(straight_path(11), p);
    CHECK(applied.front().alt_ft == 0.0);
    CHECK(applied.back().alt_ft == doctest::Approx(0.0));
    CHECK(applied[5].alt_ft == 35000.0);
}

TEST_CASE("perturb_route") {
    const Path p = straight_path(9);
    PerturbationSpec spec;
    spec.copies = 5;
    spec.seed = 99;
    const auto copies = perturb_route(p, spec);
    REQUIRE(copies.size() == 5);
    for (const auto& c : copies) {
        REQUIRE(c.size() == 9);
        CHECK(c.front() == p.front());
        CHECK(c.back() == p.back());
        for (std::size_t i = 1; i + 1 < c.size(); ++i) {
            for (auto [d, step] : {std::pair{c[i].lat - p[i].lat, spec.lat_step_deg},
                                   std::pair{c[i].lon - p[i].lon, spec.lon_step_deg},
                                   std::pair{c[i].alt_ft - p[i].alt_ft, spec.alt_step_ft}}) {
                const double k = d / step;
                CHECK(std::abs(k - std::round(k)) < 1e-9);
                CHECK(std::abs(k) <= 1.0 + 1e-9);
            }
        }
    }
    CHECK(perturb_route(p, spec) == copies);
    spec.seed = 100;
    CHECK(perturb_route(p, spec) != copies);

    CHECK_THROWS_AS(perturb_route(straight_path(2), spec), GridError);
    spec.copies = 0;
    CHECK_THROWS_AS(perturb_route(p, spec), GridError);
    spec.copies = 1;
    spec.lat_step_deg = 0.0;
    CHECK_THROWS_AS(perturb_route(p, spec), GridError);
}

TEST_CASE("perturb_route keeps coordinates in range") {
    Path p{{0.0, 0.0, 0.0}, {90.0, 180.0, 0.0}, {0.0, 1.0, 0.0}};
    PerturbationSpec spec;
    spec.copies = 200;
    spec.seed = 5;
    for (const auto& c : perturb_route(p, spec)) {
        CHECK(c[1].lat <= 90.0);
        CHECK(c[1].lon > -180.0);
        CHECK(c[1].lon <= 180.0);
        CHECK(c[1].alt_ft >= 0.0);
    }
}

TEST_CASE("structural counts: benchmark rows and small cases") {
    CHECK(structural_counts(9, 5) == StructuralCounts{44, 228});
    CHECK(structural_counts(26, 5) == StructuralCounts{146, 840});
    CHECK(structural_counts(3, 0) == StructuralCounts{3, 2});
    CHECK(layers_for_node_count(44, 5) == 9);
    CHECK(layers_for_node_count(45, 5) == std::nullopt);
    CHECK_THROWS_AS(structural_counts(2, 1), GridError);
}

TEST_CASE("build_dag matches structural_counts and an enumeration of the wiring") {
    for (std::size_t L = 3; L <= 60; L += (L < 12 ? 1 : 7)) {
        for (std::size_t P = 0; P <= 10; ++P) {
            const LayeredDag dag = grid(L, P);
            // Independent count: one node per path per interior layer, and
            // every node joined to every node of the next layer.
            std::size_t nodes = 0, edges = 0;
            std::vector<std::size_t> width(L, P + 1);
            width.front() = width.back() = 1;
            for (std::size_t i = 0; i < L; ++i) {
                nodes += width[i];
                if (i + 1 < L) edges += width[i] * width[i + 1];
            }
            const auto sc = structural_counts(L, P);
            CHECK(dag.num_nodes() == nodes);
            CHECK(dag.num_edges() == edges);
            CHECK(sc.nodes == nodes);
            CHECK(sc.edges == edges);
        }
    }
}

TEST_CASE("layered DAG invariants") {
    const LayeredDag dag = grid(7, 3);
    CHECK(dag.num_layers() == 7);
    CHECK(dag.source() == 0);
    CHECK(dag.sink() == dag.num_nodes() - 1);
    for (std::size_t i = 1; i + 1 < dag.num_layers(); ++i) CHECK(dag.layers()[i].size() == 4);
    for (const Edge& e : dag.edges()) {
        CHECK(dag.layer_of(e.to) == dag.layer_of(e.from) + 1);
        CHECK(e.from < e.to);
        CHECK_FALSE(e.weight.has_value());
    }
    CHECK_FALSE(dag.fully_weighted());

    // Every source->sink path has L - 1 edges; count them by DFS.
    std::size_t paths = 0;
    std::function<void(NodeId, std::size_t)> walk = [&](NodeId u, std::size_t depth) {
        if (u == dag.sink()) {
            CHECK(depth == dag.num_layers() - 1);
            ++paths;
            return;
        }
        for (const Edge& e : dag.out_edges(u)) walk(e.to, depth + 1);
    };
    walk(dag.source(), 0);
    CHECK(paths == 4 * 4 * 4 * 4 * 4);

    std::vector<double> w(dag.num_edges(), 1.5);
    const LayeredDag weighted = dag.with_weights(w);
    CHECK(weighted.fully_weighted());
    CHECK_THROWS_AS(dag.with_weights(std::vector<double>(3, 1.0)), GridError);
}

TEST_CASE("build_dag rejects mismatched paths") {
    const Path p = straight_path(5);
    CHECK_THROWS_AS(build_dag(p, {straight_path(6)}), GridError);
    Path moved = p;
    moved.front().lat += 1.0;
    CHECK_THROWS_AS(build_dag(p, {moved}), GridError);
    CHECK_THROWS_AS(build_dag(straight_path(2), {}), GridError);
}

TEST_CASE("density") {
    CHECK(density(grid(9, 5)) == doctest::Approx(228.0 / 946.0));
    CHECK(density(grid(3, 0)) == doctest::Approx(2.0 / 3.0));
    for (std::size_t L : {9, 23, 26, 29, 43, 47, 54, 72, 114}) CHECK(density(grid(L, 5)) < 1.0);
}
