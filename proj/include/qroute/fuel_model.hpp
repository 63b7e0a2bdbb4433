#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "qroute/mesh_grid.hpp"
#include "qroute/route.hpp"

namespace qroute {

inline constexpr double kStandardGravity = 9.80665;  // m/s^2

class FuelModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Aircraft performance parameters, SI throughout. Defaults describe an
/// A320 with CFM56-5B4 engines; tsfc is a typical CFM56-class value, not a
/// measured figure for this airframe.
struct AircraftModel {
    double mtow_kg = 77000.0;
    double mlw_kg = 64500.0;
    double tas_mps = 500.0 * kMphToMetersPerSecond;
    double drag_coefficient = 0.022;
    double reference_area_m2 = 122.6;
    double tsfc_kg_per_n_s = 1.56e-5;
    double mass_kg = 77000.0;  // held constant over the flight
};

void validate(const AircraftModel& aircraft);

/// Reads the aircraft JSON (keys carry units, e.g. "tas_mph"); missing keys keep defaults.
AircraftModel load_aircraft(std::string_view document);
AircraftModel load_aircraft_file(const std::filesystem::path& path);

/// ISA troposphere density law rho0 * (1 - lapse * h)^exponent.
struct AtmosphereModel {
    double sea_level_density = 1.225;   // kg/m^3
    double lapse_coefficient = 2.25577e-5;  // 1/m
    double exponent = 4.25588;
    double max_altitude_m = 20000.0;
};

double air_density(const AtmosphereModel& atmosphere, double altitude_m);
inline double air_density(double altitude_m) { return air_density(AtmosphereModel{}, altitude_m); }

// Clean drag, 1/2 rho V^2 S C_D.
template <typename Scalar>
constexpr Scalar drag(Scalar density, Scalar tas, Scalar area, Scalar drag_coefficient) {
    return Scalar(0.5) * density * tas * tas * area * drag_coefficient;
}

// Drag plus the along-track weight component; never negative.
template <typename Scalar>
Scalar thrust_required(Scalar drag_n, Scalar mass_kg, Scalar gamma_rad) {
    using std::sin;
    const Scalar t = drag_n + mass_kg * Scalar(kStandardGravity) * sin(gamma_rad);
    return std::max(t, Scalar(0));
}

template <typename Scalar>
constexpr Scalar fuel_flow_cruise(Scalar thrust_n, Scalar tsfc) {
    return thrust_n * tsfc;
}

template <typename Scalar>
Scalar edge_fuel(Scalar fuel_flow, Scalar distance_m, Scalar velocity) {
    if (!(velocity > Scalar(0))) throw FuelModelError("edge velocity must be positive");
    return fuel_flow * distance_m / velocity;
}

struct EdgeFuelBreakdown {
    double distance_m = 0.0;
    double gamma_rad = 0.0;
    double mean_altitude_m = 0.0;
    double density = 0.0;
    double drag_n = 0.0;
    double thrust_n = 0.0;
    double fuel_flow_kg_s = 0.0;
    double fuel_kg = 0.0;
};

/// Edge fuel from its geometry: 3D length, climb angle and mean altitude.
EdgeFuelBreakdown edge_breakdown(double distance_m, double gamma_rad, double mean_altitude_m,
                                 const AircraftModel& aircraft, const AtmosphereModel& atmosphere);

/// Edge fuel between two nodes. gamma = atan2(altitude change, horizontal run),
/// where the horizontal run is the chord length with the altitude change removed.
EdgeFuelBreakdown edge_breakdown(const Waypoint& a, const Waypoint& b,
                                 const AircraftModel& aircraft, const AtmosphereModel& atmosphere);

/// Per-edge breakdowns in edge order. Evaluated in parallel; the result does
/// not depend on scheduling.
std::vector<EdgeFuelBreakdown> edge_breakdowns(const LayeredDag& dag, const AircraftModel& aircraft,
                                               const AtmosphereModel& atmosphere);

/// Copy of the DAG with every edge weighted by its cruise fuel burn (kg).
LayeredDag weigh_edges(const LayeredDag& dag, const AircraftModel& aircraft,
                       const AtmosphereModel& atmosphere);

}  // namespace qroute
