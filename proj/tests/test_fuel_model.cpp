#include <doctest.h>

#include <cmath>

#include "qroute/fuel_model.hpp"
#include "qroute/random.hpp"

using namespace qroute;

TEST_CASE("ISA density") {
    CHECK(air_density(0.0) == 1.225);
    CHECK(air_density(11000.0) == doctest::Approx(1.225 * std::pow(1.0 - 2.25577e-5 * 11000.0, 4.25588)));
    CHECK(air_density(11000.0) == doctest::Approx(0.364).epsilon(2e-3));
    double prev = air_density(0.0);
    for (double h = 250.0; h <= 36000 * kFeetToMeters; h += 250.0) {
        const double rho = air_density(h);
        CHECK(rho < prev);
        prev = rho;
    }
    CHECK_THROWS_AS(air_density(-1.0), FuelModelError);
    CHECK_THROWS_AS(air_density(20001.0), FuelModelError);
}

TEST_CASE("drag, thrust, flow and edge fuel") {
    const double d = drag(1.225, 223.52, 122.6, 0.022);
    CHECK(d == doctest::Approx(82540.0).epsilon(1e-4));
    CHECK(drag(1.225, 2 * 223.52, 122.6, 0.022) == doctest::Approx(4 * d));
    CHECK(drag(0.0, 223.52, 122.6, 0.022) == 0.0);

    CHECK(thrust_required(d, 77000.0, 0.0) == d);
    CHECK(thrust_required(82540.0, 77000.0, 0.05) ==
          doctest::Approx(82540.0 + 77000.0 * 9.80665 * std::sin(0.05)));
    CHECK(thrust_required(82540.0, 77000.0, 0.05) == doctest::Approx(120280.0).epsilon(1e-4));
    CHECK(thrust_required(82540.0, 77000.0, -0.5) == 0.0);

    CHECK(fuel_flow_cruise(0.0, 1.56e-5) == 0.0);
    CHECK(fuel_flow_cruise(82540.0, 1.56e-5) == doctest::Approx(1.288).epsilon(1e-3));
    CHECK(fuel_flow_cruise(2 * 82540.0, 1.56e-5) == doctest::Approx(2 * fuel_flow_cruise(82540.0, 1.56e-5)));

    CHECK(edge_fuel(1.288, 0.0, 223.52) == 0.0);
    CHECK(edge_fuel(1.288, 100000.0, 223.52) == doctest::Approx(576.2).epsilon(1e-4));
    CHECK(edge_fuel(1.288, 200000.0, 223.52) == doctest::Approx(2 * edge_fuel(1.288, 100000.0, 223.52)));
    CHECK_THROWS_AS(edge_fuel(1.0, 1.0, 0.0), FuelModelError);
    CHECK_THROWS_AS(edge_fuel(1.0, 1.0, -3.0), FuelModelError);
}

TEST_CASE("aircraft configuration") {
    const AircraftModel a = load_aircraft(R"({"tas_mph": 500, "mtow_kg": 77000, "tsfc_kg_per_N_s": 2e-5})");
    CHECK(a.tas_mps == doctest::Approx(223.52));
    CHECK(a.tsfc_kg_per_n_s == 2e-5);
    CHECK(a.mass_kg == 77000.0);
    const AircraftModel heavy = load_aircraft(R"({"mtow_kg": 80000})");
    CHECK(heavy.mass_kg == 80000.0);
    CHECK_THROWS_AS(load_aircraft(R"({"mass_kg": 90000})"), FuelModelError);
    CHECK_THROWS_AS(load_aircraft(R"({"tas_mph": -1})"), FuelModelError);
    CHECK_THROWS_AS(load_aircraft(R"({"tas_mph": "fast"})"), FuelModelError);
    CHECK_THROWS_AS(load_aircraft("[1"), FuelModelError);
    CHECK_NOTHROW(load_aircraft_file(std::filesystem::path(QROUTE_SOURCE_DIR) / "data" / "aircraft_a320.json"));
}

TEST_CASE("level edge equals the manual composition") {
    const AircraftModel ac;
    const AtmosphereModel atm;
    const Waypoint a{40.0, -75.0, 35000.0}, b{40.0, -74.0, 35000.0};
    const auto e = edge_breakdown(a, b, ac, atm);
    const double h = 35000.0 * 0.3048;
    const double dist_m = node_distance(a, b) * 1000.0;
    const double rho = 1.225 * std::pow(1.0 - 2.25577e-5 * h, 4.25588);
    const double dr = 0.5 * rho * ac.tas_mps * ac.tas_mps * ac.reference_area_m2 * ac.drag_coefficient;
    const double expected = dr * ac.tsfc_kg_per_n_s * dist_m / ac.tas_mps;
    CHECK(e.gamma_rad == 0.0);
    CHECK(e.distance_m == doctest::Approx(dist_m).epsilon(1e-12));
    CHECK(e.fuel_kg == doctest::Approx(expected).epsilon(1e-12));
    CHECK(e.fuel_kg == doctest::Approx(e.fuel_flow_kg_s * e.distance_m / ac.tas_mps).epsilon(1e-15));
    CHECK(edge_breakdown(a, b, ac, atm).fuel_kg == edge_breakdown(b, a, ac, atm).fuel_kg);
}

TEST_CASE("climbing edge weighs more than a level edge at the same mean altitude") {
    const AircraftModel ac;
    const AtmosphereModel atm;
    const auto level = edge_breakdown(100000.0, 0.0, 9000.0, ac, atm);
    const auto climb = edge_breakdown(100000.0, 0.02, 9000.0, ac, atm);
    const auto steeper = edge_breakdown(100000.0, 0.04, 9000.0, ac, atm);
    CHECK(climb.fuel_kg > level.fuel_kg);
    CHECK(steeper.fuel_kg > climb.fuel_kg);

    const auto by_nodes = edge_breakdown(Waypoint{40.0, -75.0, 30000.0}, Waypoint{40.0, -74.5, 32000.0}, ac, atm);
    CHECK(by_nodes.gamma_rad > 0.0);
    CHECK(by_nodes.mean_altitude_m == doctest::Approx(31000.0 * 0.3048));
}

TEST_CASE("weigh_edges is deterministic and matches per-edge breakdowns") {
    Path p;
    for (int i = 0; i < 8; ++i) p.push_back({40.0, -75.0 + i * 0.4, i == 0 || i == 7 ? 0.0 : 30000.0});
    PerturbationSpec spec;
    spec.copies = 4;
    spec.seed = 17;
    const LayeredDag dag = build_dag(p, perturb_route(p, spec));
    const AircraftModel ac;
    const LayeredDag w1 = weigh_edges(dag, ac, AtmosphereModel{});
    const LayeredDag w2 = weigh_edges(dag, ac, AtmosphereModel{});
    REQUIRE(w1.fully_weighted());
    for (std::size_t i = 0; i < dag.num_edges(); ++i) {
        const Edge& e = w1.edges()[i];
        CHECK(*e.weight == *w2.edges()[i].weight);
        CHECK(*e.weight == edge_breakdown(dag.coord(e.from), dag.coord(e.to), ac, AtmosphereModel{}).fuel_kg);
    }

    Path high = p;
    high[3].alt_ft = 80000.0;
    CHECK_THROWS_AS(weigh_edges(build_dag(high, {}), ac, AtmosphereModel{}), FuelModelError);
}
