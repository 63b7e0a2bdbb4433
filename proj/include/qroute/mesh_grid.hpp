#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qroute/route.hpp"

namespace qroute {

using NodeId = std::uint32_t;

class GridError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct PerturbationSpec {
    double lat_step_deg = 0.1;
    double lon_step_deg = 0.1;
    double alt_step_ft = 1000.0;
    std::size_t copies = 5;
    std::uint64_t seed = 0;
};

void validate(const PerturbationSpec& spec);

/// Trapezoidal climb / cruise / descent profile over the route fraction.
struct AltitudeProfile {
    double climb_fraction = 0.15;
    double descent_fraction = 0.85;
    double cruise_altitude_ft = 35000.0;
};

void validate(const AltitudeProfile& profile);

double altitude_at(const AltitudeProfile& profile, double fraction);

/// Re-assigns waypoint altitudes from the profile, using the fraction of
/// cumulative surface distance travelled.
Path apply_altitude_profile(const Path& path, const AltitudeProfile& profile);

/// Generates `spec.copies` jittered copies of the path. Endpoints are fixed;
/// each interior point moves by {-1, 0, +1} steps per axis. Latitude is
/// clamped to [-90, 90], longitude wrapped, altitude floored at 0.
std::vector<Path> perturb_route(const Path& path, const PerturbationSpec& spec);

struct Edge {
    NodeId from = 0;
    NodeId to = 0;
    std::optional<double> weight;  // kg of fuel once weighed
};

/// Layered DAG: layer 0 holds the source, the last layer the sink, every
/// interior layer holds one node per path. Edges run only between adjacent
/// layers, so node ids in layer order are a topological order.
class LayeredDag {
  public:
    LayeredDag() = default;
    LayeredDag(std::vector<std::vector<NodeId>> layers, std::vector<Waypoint> coords,
               std::vector<Edge> edges);

    std::size_t num_nodes() const { return coords_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_layers() const { return layers_.size(); }

    NodeId source() const { return layers_.front().front(); }
    NodeId sink() const { return layers_.back().front(); }

    const std::vector<std::vector<NodeId>>& layers() const { return layers_; }
    const std::vector<Waypoint>& coords() const { return coords_; }
    const Waypoint& coord(NodeId v) const { return coords_.at(v); }
    std::size_t layer_of(NodeId v) const { return layer_of_.at(v); }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const Edge> out_edges(NodeId u) const;
    /// Index of the first out-edge of u in edges().
    std::size_t out_offset(NodeId u) const { return offsets_.at(u); }

    bool fully_weighted() const;
    /// Copy with edge i carrying weights[i].
    LayeredDag with_weights(std::span<const double> weights) const;

  private:
    std::vector<std::vector<NodeId>> layers_;
    std::vector<Waypoint> coords_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> layer_of_;
};

/// Connects the original path and its perturbed copies into a layered DAG with
/// complete bipartite wiring between adjacent layers. Weights are unset.
LayeredDag build_dag(const Path& original, const std::vector<Path>& perturbed);

struct StructuralCounts {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    friend bool operator==(const StructuralCounts&, const StructuralCounts&) = default;
};

/// Node and edge totals of build_dag for `layers` total layers and `copies` perturbed paths.
StructuralCounts structural_counts(std::size_t layers, std::size_t copies);

/// Layer count L with structural_counts(L, copies).nodes == nodes, if any.
std::optional<std::size_t> layers_for_node_count(std::size_t nodes, std::size_t copies);

/// |E| over V(V-1)/2.
double density(const LayeredDag& dag);

}  // namespace qroute
