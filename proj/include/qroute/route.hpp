#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace qroute {

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kFeetToMeters = 0.3048;
inline constexpr double kMphToMetersPerSecond = 0.44704;

/// Raised when a route document cannot be parsed.
class RouteParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a parsed route violates a domain invariant.
class RouteValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Waypoint {
    double lat = 0.0;     // degrees, [-90, 90]
    double lon = 0.0;     // degrees, (-180, 180]
    double alt_ft = 0.0;  // feet, >= 0

    friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

using Path = std::vector<Waypoint>;

struct Route {
    std::string origin;
    std::string destination;
    double max_altitude_ft = 0.0;
    Path waypoints;

    friend bool operator==(const Route&, const Route&) = default;
};

/// Throws RouteValidationError if the waypoint is outside the geodetic ranges.
void validate(const Waypoint& w);
/// Checks waypoint ranges, length >= 2 and distinct consecutive (lat, lon).
void validate(const Route& r);

/// Parses a JSON route document; see README for the schema.
Route load_route(std::string_view document);
Route load_route_file(const std::filesystem::path& path);
std::string serialize_route(const Route& route);

/// Earth-centred Cartesian position in km on a spherical Earth, altitude added to the radius.
Eigen::Vector3d to_cartesian_km(const Waypoint& w);

/// 3D chord distance in km between two waypoints.
double node_distance(const Waypoint& a, const Waypoint& b);

/// Sum of node distances along the waypoint list, km.
double path_length(const Path& path);

/// Point at fraction t in [0, 1] of the segment a->b; lat/lon/alt interpolate
/// linearly, longitude along the shorter arc.
Waypoint interpolate(const Waypoint& a, const Waypoint& b, double t);

/// Densifies the route by `count` interpolated points. Each point goes to the
/// segment whose current sub-gap is largest (earlier segment on ties); the
/// points of a segment are evenly spaced along it.
Route insert_midpoints(const Route& route, std::size_t count);

/// Source of flight routes. Stands in for a flight-plan web service.
class RouteSource {
  public:
    virtual ~RouteSource() = default;
    virtual Route fetch(std::string_view origin, std::string_view destination) const = 0;
};

/// Looks up `<ORIGIN>-<DESTINATION>.json` in a directory.
class FileRouteSource final : public RouteSource {
  public:
    explicit FileRouteSource(std::filesystem::path directory);
    Route fetch(std::string_view origin, std::string_view destination) const override;

  private:
    std::filesystem::path directory_;
};

}  // namespace qroute
