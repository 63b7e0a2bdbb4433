#include "qroute/fuel_model.hpp"

#include <algorithm>
#include <execution>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include <json.hpp>

namespace qroute {

void validate(const AircraftModel& a) {
    const double fields[] = {a.mtow_kg,           a.mlw_kg,          a.tas_mps, a.drag_coefficient,
                             a.reference_area_m2, a.tsfc_kg_per_n_s, a.mass_kg};
    for (double f : fields)
        if (!(f > 0.0) || !std::isfinite(f))
            throw FuelModelError("aircraft parameters must be finite and positive");
    if (a.mass_kg > a.mtow_kg) throw FuelModelError("aircraft mass exceeds MTOW");
    if (a.mlw_kg > a.mtow_kg) throw FuelModelError("MLW exceeds MTOW");
}

AircraftModel load_aircraft(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw FuelModelError(std::string("aircraft document: ") + e.what());
    }
    if (!doc.is_object()) throw FuelModelError("aircraft document must be an object");

    AircraftModel a;
    auto read = [&doc](const char* key, double& target, double scale = 1.0) {
        if (auto it = doc.find(key); it != doc.end()) {
            if (!it->is_number())
                throw FuelModelError(std::string("aircraft field '") + key + "' must be numeric");
            target = it->get<double>() * scale;
        }
    };
    read("mtow_kg", a.mtow_kg);
    read("mlw_kg", a.mlw_kg);
    read("tas_mph", a.tas_mps, kMphToMetersPerSecond);
    read("drag_coefficient", a.drag_coefficient);
    read("reference_area_m2", a.reference_area_m2);
    read("tsfc_kg_per_N_s", a.tsfc_kg_per_n_s);
    a.mass_kg = a.mtow_kg;
    read("mass_kg", a.mass_kg);
    validate(a);
    return a;
}

AircraftModel load_aircraft_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FuelModelError("cannot open aircraft file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return load_aircraft(ss.str());
}

double air_density(const AtmosphereModel& atm, double altitude_m) {
    if (!(altitude_m >= 0.0 && altitude_m <= atm.max_altitude_m))
        throw FuelModelError("altitude out of atmosphere range: " + std::to_string(altitude_m));
    return atm.sea_level_density * std::pow(1.0 - atm.lapse_coefficient * altitude_m, atm.exponent);
}

EdgeFuelBreakdown edge_breakdown(double distance_m, double gamma_rad, double mean_altitude_m,
                                 const AircraftModel& aircraft, const AtmosphereModel& atmosphere) {
    EdgeFuelBreakdown b;
    b.distance_m = distance_m;
    b.gamma_rad = gamma_rad;
    b.mean_altitude_m = mean_altitude_m;
    b.density = air_density(atmosphere, mean_altitude_m);
    b.drag_n = drag(b.density, aircraft.tas_mps, aircraft.reference_area_m2, aircraft.drag_coefficient);
    b.thrust_n = thrust_required(b.drag_n, aircraft.mass_kg, gamma_rad);
    b.fuel_flow_kg_s = fuel_flow_cruise(b.thrust_n, aircraft.tsfc_kg_per_n_s);
    b.fuel_kg = edge_fuel(b.fuel_flow_kg_s, distance_m, aircraft.tas_mps);
    return b;
}

EdgeFuelBreakdown edge_breakdown(const Waypoint& a, const Waypoint& b,
                                 const AircraftModel& aircraft, const AtmosphereModel& atmosphere) {
    const double distance_m = node_distance(a, b) * 1000.0;
    const double rise_m = (b.alt_ft - a.alt_ft) * kFeetToMeters;
    const double run_m = std::sqrt(std::max(0.0, distance_m * distance_m - rise_m * rise_m));
    const double gamma = (distance_m > 0.0) ? std::atan2(rise_m, run_m) : 0.0;
    const double mean_alt_m = 0.5 * (a.alt_ft + b.alt_ft) * kFeetToMeters;
    return edge_breakdown(distance_m, gamma, mean_alt_m, aircraft, atmosphere);
}

std::vector<EdgeFuelBreakdown> edge_breakdowns(const LayeredDag& dag, const AircraftModel& aircraft,
                                               const AtmosphereModel& atmosphere) {
    validate(aircraft);
    // Parallel workers must not throw, so the range checks happen here.
    for (const Waypoint& w : dag.coords()) {
        const double alt_m = w.alt_ft * kFeetToMeters;
        if (!(alt_m >= 0.0 && alt_m <= atmosphere.max_altitude_m))
            throw FuelModelError("node altitude out of atmosphere range: " + std::to_string(alt_m));
    }
    const auto edges = dag.edges();
    std::vector<EdgeFuelBreakdown> out(edges.size());
    std::transform(std::execution::par, edges.begin(), edges.end(), out.begin(),
                   [&](const Edge& e) {
                       return edge_breakdown(dag.coord(e.from), dag.coord(e.to), aircraft, atmosphere);
                   });
    return out;
}

LayeredDag weigh_edges(const LayeredDag& dag, const AircraftModel& aircraft,
                       const AtmosphereModel& atmosphere) {
    const auto breakdowns = edge_breakdowns(dag, aircraft, atmosphere);
    std::vector<double> weights(breakdowns.size());
    std::transform(breakdowns.begin(), breakdowns.end(), weights.begin(),
                   [](const EdgeFuelBreakdown& b) { return b.fuel_kg; });
    return dag.with_weights(weights);
}

}  // namespace qroute
