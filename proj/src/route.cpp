#include "qroute/route.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace qroute {

namespace {

using nlohmann::json;

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

double require_number(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number())
        throw RouteParseError(std::string("route document: missing numeric field '") + key + "'");
    return it->get<double>();
}

std::string require_string(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string())
        throw RouteParseError(std::string("route document: missing string field '") + key + "'");
    return it->get<std::string>();
}

// Wraps a longitude into (-180, 180].
double wrap_lon(double lon) {
    double w = std::fmod(lon + 180.0, 360.0);
    if (w <= 0.0) w += 360.0;
    return w - 180.0;
}

}  // namespace

void validate(const Waypoint& w) {
    if (!std::isfinite(w.lat) || w.lat < -90.0 || w.lat > 90.0)
        throw RouteValidationError("latitude out of range: " + std::to_string(w.lat));
    if (!std::isfinite(w.lon) || w.lon <= -180.0 || w.lon > 180.0)
        throw RouteValidationError("longitude out of range: " + std::to_string(w.lon));
    if (!std::isfinite(w.alt_ft) || w.alt_ft < 0.0)
        throw RouteValidationError("altitude must be non-negative: " + std::to_string(w.alt_ft));
}

void validate(const Route& r) {
    if (r.waypoints.size() < 2)
        throw RouteValidationError("route needs at least 2 waypoints, got " +
                                   std::to_string(r.waypoints.size()));
    if (!std::isfinite(r.max_altitude_ft) || r.max_altitude_ft < 0.0)
        throw RouteValidationError("max altitude must be non-negative");
    for (std::size_t i = 0; i < r.waypoints.size(); ++i) {
        validate(r.waypoints[i]);
        if (i > 0 && r.waypoints[i].lat == r.waypoints[i - 1].lat &&
            r.waypoints[i].lon == r.waypoints[i - 1].lon)
            throw RouteValidationError("consecutive waypoints " + std::to_string(i - 1) + " and " +
                                       std::to_string(i) + " coincide");
    }
}

Route load_route(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw RouteParseError(std::string("route document: ") + e.what());
    }
    if (!doc.is_object()) throw RouteParseError("route document: top level must be an object");

    Route r;
    r.origin = require_string(doc, "origin");
    r.destination = require_string(doc, "destination");
    r.max_altitude_ft = require_number(doc, "max_altitude_ft");

    auto wps = doc.find("waypoints");
    if (wps == doc.end() || !wps->is_array())
        throw RouteParseError("route document: 'waypoints' must be an array");
    r.waypoints.reserve(wps->size());
    for (const auto& w : *wps) {
        if (!w.is_object()) throw RouteParseError("route document: waypoint must be an object");
        r.waypoints.push_back({require_number(w, "lat"), require_number(w, "lon"),
                               require_number(w, "alt_ft")});
    }
    validate(r);
    return r;
}

Route load_route_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw RouteParseError("cannot open route document " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return load_route(ss.str());
}

std::string serialize_route(const Route& route) {
    json doc;
    doc["origin"] = route.origin;
    doc["destination"] = route.destination;
    doc["max_altitude_ft"] = route.max_altitude_ft;
    doc["waypoints"] = json::array();
    for (const auto& w : route.waypoints)
        doc["waypoints"].push_back({{"lat", w.lat}, {"lon", w.lon}, {"alt_ft", w.alt_ft}});
    return doc.dump(2);
}

Eigen::Vector3d to_cartesian_km(const Waypoint& w) {
    const double r = kEarthRadiusKm + w.alt_ft * kFeetToMeters / 1000.0;
    const double lat = deg2rad(w.lat);
    const double lon = deg2rad(w.lon);
    return r * Eigen::Vector3d(std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon),
                               std::sin(lat));
}

double node_distance(const Waypoint& a, const Waypoint& b) {
    return (to_cartesian_km(a) - to_cartesian_km(b)).norm();
}

double path_length(const Path& path) {
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) total += node_distance(path[i - 1], path[i]);
    return total;
}

Waypoint interpolate(const Waypoint& a, const Waypoint& b, double t) {
    double dlon = b.lon - a.lon;
    if (dlon > 180.0) dlon -= 360.0;
    if (dlon < -180.0) dlon += 360.0;
    return {a.lat + t * (b.lat - a.lat), wrap_lon(a.lon + t * dlon),
            a.alt_ft + t * (b.alt_ft - a.alt_ft)};
}

Route insert_midpoints(const Route& route, std::size_t count) {
    if (count == 0 || route.waypoints.size() < 2) return route;

    const std::size_t segments = route.waypoints.size() - 1;
    std::vector<double> length(segments);
    for (std::size_t s = 0; s < segments; ++s)
        length[s] = node_distance(route.waypoints[s], route.waypoints[s + 1]);

    std::vector<std::size_t> extra(segments, 0);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t best = 0;
        double best_gap = -1.0;
        for (std::size_t s = 0; s < segments; ++s) {
            const double gap = length[s] / static_cast<double>(extra[s] + 1);
            if (gap > best_gap) {
                best = s;
                best_gap = gap;
            }
        }
        ++extra[best];
    }

    Route out = route;
    out.waypoints.clear();
    out.waypoints.reserve(route.waypoints.size() + count);
    for (std::size_t s = 0; s < segments; ++s) {
        const auto& a = route.waypoints[s];
        const auto& b = route.waypoints[s + 1];
        out.waypoints.push_back(a);
        const double pieces = static_cast<double>(extra[s] + 1);
        for (std::size_t j = 1; j <= extra[s]; ++j)
            out.waypoints.push_back(interpolate(a, b, static_cast<double>(j) / pieces));
    }
    out.waypoints.push_back(route.waypoints.back());
    return out;
}

FileRouteSource::FileRouteSource(std::filesystem::path directory)
    : directory_(std::move(directory)) {}

Route FileRouteSource::fetch(std::string_view origin, std::string_view destination) const {
    const auto file = directory_ / (std::string(origin) + "-" + std::string(destination) + ".json");
    if (!std::filesystem::exists(file))
        throw RouteParseError("no route document for " + std::string(origin) + "-" +
                              std::string(destination) + " in " + directory_.string());
    return load_route_file(file);
}

}  // namespace qroute
