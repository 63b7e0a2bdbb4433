#include "qroute/mesh_grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qroute/random.hpp"

namespace qroute {

void validate(const PerturbationSpec& spec) {
    if (!(spec.lat_step_deg > 0.0) || !(spec.lon_step_deg > 0.0) || !(spec.alt_step_ft > 0.0))
        throw GridError("perturbation steps must be strictly positive");
    if (spec.copies < 1) throw GridError("perturbation needs at least one copy");
}

void validate(const AltitudeProfile& profile) {
    if (!(profile.climb_fraction >= 0.0 && profile.climb_fraction < 0.5))
        throw GridError("climb fraction must lie in [0, 0.5)");
    if (!(profile.descent_fraction > 0.5 && profile.descent_fraction <= 1.0))
        throw GridError("descent fraction must lie in (0.5, 1]");
    if (!(profile.cruise_altitude_ft >= 0.0)) throw GridError("cruise altitude must be >= 0");
}

double altitude_at(const AltitudeProfile& profile, double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw GridError("profile fraction out of [0, 1]: " + std::to_string(fraction));
    const double cruise = profile.cruise_altitude_ft;
    if (fraction < profile.climb_fraction) return cruise * fraction / profile.climb_fraction;
    if (fraction > profile.descent_fraction)
        return cruise * (1.0 - fraction) / (1.0 - profile.descent_fraction);
    return cruise;
}

Path apply_altitude_profile(const Path& path, const AltitudeProfile& profile) {
    validate(profile);
    Path out = path;
    if (path.size() < 2) return out;

    std::vector<double> cumulative(path.size(), 0.0);
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Waypoint a{path[i - 1].lat, path[i - 1].lon, 0.0};
        const Waypoint b{path[i].lat, path[i].lon, 0.0};
        cumulative[i] = cumulative[i - 1] + node_distance(a, b);
    }
    const double total = cumulative.back();
    for (std::size_t i = 0; i < path.size(); ++i) {
        const double f = total > 0.0 ? std::clamp(cumulative[i] / total, 0.0, 1.0) : 0.0;
        out[i].alt_ft = altitude_at(profile, f);
    }
    out.front().alt_ft = altitude_at(profile, 0.0);
    out.back().alt_ft = altitude_at(profile, 1.0);
    return out;
}

std::vector<Path> perturb_route(const Path& path, const PerturbationSpec& spec) {
    validate(spec);
    if (path.size() < 3)
        throw GridError("perturbation needs at least 3 points, got " + std::to_string(path.size()));

    Rng rng(spec.seed);
    auto step = [&rng] { return static_cast<double>(uniform_index(rng, 3)) - 1.0; };

    std::vector<Path> copies;
    copies.reserve(spec.copies);
    for (std::size_t j = 0; j < spec.copies; ++j) {
        Path p = path;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            const double dlat = step();
            const double dlon = step();
            const double dalt = step();
            Waypoint& w = p[i];
            w.lat = std::clamp(w.lat + dlat * spec.lat_step_deg, -90.0, 90.0);
            double lon = w.lon + dlon * spec.lon_step_deg;
            if (lon > 180.0) lon -= 360.0;
            if (lon <= -180.0) lon += 360.0;
            w.lon = lon;
            w.alt_ft = std::max(0.0, w.alt_ft + dalt * spec.alt_step_ft);
        }
        copies.push_back(std::move(p));
    }
    return copies;
}

LayeredDag::LayeredDag(std::vector<std::vector<NodeId>> layers, std::vector<Waypoint> coords,
                       std::vector<Edge> edges)
    : layers_(std::move(layers)), coords_(std::move(coords)), edges_(std::move(edges)) {
    if (layers_.empty() || layers_.front().size() != 1 || layers_.back().size() != 1)
        throw GridError("layered DAG needs single-node source and sink layers");

    layer_of_.assign(coords_.size(), 0);
    std::vector<bool> seen(coords_.size(), false);
    for (std::size_t l = 0; l < layers_.size(); ++l)
        for (NodeId v : layers_[l]) {
            if (v >= coords_.size() || seen[v]) throw GridError("bad node id in layer list");
            seen[v] = true;
            layer_of_[v] = l;
        }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw GridError("node missing from layer list");

    if (!std::is_sorted(edges_.begin(), edges_.end(),
                        [](const Edge& a, const Edge& b) { return a.from < b.from; }))
        throw GridError("edges must be grouped by source node");
    offsets_.assign(coords_.size() + 1, 0);
    for (const Edge& e : edges_) {
        if (e.from >= coords_.size() || e.to >= coords_.size())
            throw GridError("edge endpoint out of range");
        if (layer_of_[e.to] != layer_of_[e.from] + 1)
            throw GridError("edge does not join adjacent layers");
        ++offsets_[e.from + 1];
    }
    for (std::size_t v = 0; v < coords_.size(); ++v) offsets_[v + 1] += offsets_[v];
}

std::span<const Edge> LayeredDag::out_edges(NodeId u) const {
    const std::size_t begin = offsets_.at(u);
    const std::size_t end = offsets_.at(u + 1);
    return std::span<const Edge>(edges_).subspan(begin, end - begin);
}

bool LayeredDag::fully_weighted() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight.has_value(); });
}

LayeredDag LayeredDag::with_weights(std::span<const double> weights) const {
    if (weights.size() != edges_.size()) throw GridError("weight count does not match edge count");
    LayeredDag out = *this;
    for (std::size_t i = 0; i < weights.size(); ++i) out.edges_[i].weight = weights[i];
    return out;
}

LayeredDag build_dag(const Path& original, const std::vector<Path>& perturbed) {
    const std::size_t total_layers = original.size();
    if (total_layers < 3) throw GridError("DAG needs at least 3 layers");
    for (const Path& p : perturbed) {
        if (p.size() != total_layers) throw GridError("perturbed path length mismatch");
        if (!(p.front() == original.front()) || !(p.back() == original.back()))
            throw GridError("perturbed path does not share the route endpoints");
    }

    const std::size_t width = perturbed.size() + 1;
    std::vector<std::vector<NodeId>> layers;
    std::vector<Waypoint> coords;
    layers.reserve(total_layers);

    auto add_node = [&coords](const Waypoint& w) {
        coords.push_back(w);
        return static_cast<NodeId>(coords.size() - 1);
    };

    layers.push_back({add_node(original.front())});
    for (std::size_t i = 1; i + 1 < total_layers; ++i) {
        std::vector<NodeId> layer;
        layer.reserve(width);
        layer.push_back(add_node(original[i]));
        for (const Path& p : perturbed) layer.push_back(add_node(p[i]));
        layers.push_back(std::move(layer));
    }
    layers.push_back({add_node(original.back())});

    std::vector<Edge> edges;
    edges.reserve(structural_counts(total_layers, perturbed.size()).edges);
    for (std::size_t l = 0; l + 1 < layers.size(); ++l)
        for (NodeId u : layers[l])
            for (NodeId v : layers[l + 1]) edges.push_back({u, v, std::nullopt});

    return LayeredDag(std::move(layers), std::move(coords), std::move(edges));
}

StructuralCounts structural_counts(std::size_t layers, std::size_t copies) {
    if (layers < 3) throw GridError("structural counts need at least 3 layers");
    const std::size_t width = copies + 1;
    return {(layers - 2) * width + 2, 2 * width + (layers - 3) * width * width};
}

std::optional<std::size_t> layers_for_node_count(std::size_t nodes, std::size_t copies) {
    const std::size_t width = copies + 1;
    if (nodes < width + 2 || (nodes - 2) % width != 0) return std::nullopt;
    return (nodes - 2) / width + 2;
}

double density(const LayeredDag& dag) {
    const double v = static_cast<double>(dag.num_nodes());
    if (v < 2.0) return 0.0;
    return static_cast<double>(dag.num_edges()) / (v * (v - 1.0) / 2.0);
}

}  // namespace qroute
