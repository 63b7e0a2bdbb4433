#include "qroute/pipeline.hpp"

#include <charconv>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

namespace qroute {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

// Shortest round-trip decimal form; stable across runs and hosts.
std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string fixed2(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, end);
}

ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PipelineError("output", "cannot write " + path.string());
    out << text;
}

void write_json(const fs::path& path, const ordered_json& j) { write_text(path, j.dump(2) + "\n"); }

template <typename F>
auto stage_guard(const char* stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(stage, e.what());
    }
}

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return (path.is_absolute() ? path : base / path).lexically_normal();
}

nlohmann::json parse_or_throw(std::string_view document, const char* what) {
    try {
        return nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw PipelineError("config", std::string(what) + ": " + e.what());
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw PipelineError("config", "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void apply_common(const nlohmann::json& doc, const fs::path& base, PipelineConfig& c) {
    if (auto it = doc.find("perturbation"); it != doc.end()) {
        c.perturbation.lat_step_deg = it->value("lat_step_deg", c.perturbation.lat_step_deg);
        c.perturbation.lon_step_deg = it->value("lon_step_deg", c.perturbation.lon_step_deg);
        c.perturbation.alt_step_ft = it->value("alt_step_ft", c.perturbation.alt_step_ft);
        c.perturbation.copies = it->value("copies", c.perturbation.copies);
    }
    if (auto it = doc.find("altitude_profile"); it != doc.end()) {
        c.altitude_profile.climb_fraction = it->value("climb_fraction", c.altitude_profile.climb_fraction);
        c.altitude_profile.descent_fraction = it->value("descent_fraction", c.altitude_profile.descent_fraction);
    }
    if (auto it = doc.find("aircraft"); it != doc.end()) c.aircraft_file = resolve(base, it->get<std::string>());
    if (auto it = doc.find("modalities"); it != doc.end()) c.modality_file = resolve(base, it->get<std::string>());
    if (auto it = doc.find("decomposition"); it != doc.end())
        c.decomposition_file = resolve(base, it->get<std::string>());
    if (auto it = doc.find("solver"); it != doc.end()) c.solver = parse_solver(it->get<std::string>());
    if (auto it = doc.find("qmf"); it != doc.end()) {
        c.qmf.shots_per_round = it->value("shots_per_round", c.qmf.shots_per_round);
        c.qmf.max_rounds = it->value("max_rounds", c.qmf.max_rounds);
        c.qmf.verify = it->value("verify", c.qmf.verify);
    }
    if (auto it = doc.find("classical_cost"); it != doc.end()) {
        c.classical.per_comparison_s = it->value("per_comparison_s", c.classical.per_comparison_s);
        c.classical.overhead_s = it->value("overhead_s", c.classical.overhead_s);
    }
    c.seed = doc.value("seed", c.seed);
    if (auto it = doc.find("out"); it != doc.end()) c.out_dir = resolve(base, it->get<std::string>());
}

ordered_json stats_json(const QmfStats& s) {
    ordered_json counts = ordered_json::object();
    for (std::size_t i = 0; i < kNumBasisGates; ++i)
        counts[std::string(basis_name(static_cast<BasisGate>(i)))] = s.gate_counts.n[i];
    return {{"calls", s.calls},
            {"outer_rounds", s.outer_rounds},
            {"oracle_invocations", s.oracle_invocations},
            {"grover_iterations", s.grover_iterations_total},
            {"measurements", s.measurements},
            {"shots_per_round", s.shots_per_round},
            {"restarts", s.restarts},
            {"gate_counts", counts}};
}

ordered_json sssp_json(const PipelineResult& r, const SsspReport& rep, std::string_view algorithm) {
    const NodeId sink = r.dag.sink();
    ordered_json j;
    j["algorithm"] = algorithm;
    j["source"] = rep.source;
    j["target"] = sink;
    const auto path = extract_path(rep, sink);
    j["path"] = path;
    j["path_weight_kg"] = path_weight(r.dag, path);
    j["distances"] = ordered_json::array();
    for (double d : rep.dist) j["distances"].push_back(finite_or_null(d));
    j["extraction_order"] = rep.extraction_order;
    j["scan_comparisons"] = rep.scan_comparisons;
    j["relaxations"] = rep.relaxations;
    j["qmf_stats"] = rep.qmf_stats ? stats_json(*rep.qmf_stats) : ordered_json(nullptr);
    return j;
}

std::string path_csv(const LayeredDag& dag, const std::vector<NodeId>& path) {
    std::ostringstream os;
    os << "seq,node,lat,lon,alt_ft\n";
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& w = dag.coord(path[i]);
        os << i << ',' << path[i] << ',' << fmt(w.lat) << ',' << fmt(w.lon) << ',' << fmt(w.alt_ft) << '\n';
    }
    return os.str();
}

ordered_json grid_json(const PipelineResult& r, const PipelineConfig& c) {
    const auto& dag = r.dag;
    ordered_json j;
    j["route"] = {{"origin", r.route.origin}, {"destination", r.route.destination}};
    j["layers_total"] = dag.num_layers();
    j["copies"] = c.perturbation.copies;
    j["num_nodes"] = dag.num_nodes();
    j["num_edges"] = dag.num_edges();
    j["density"] = density(dag);
    j["source"] = dag.source();
    j["sink"] = dag.sink();
    j["layers"] = dag.layers();
    j["nodes"] = ordered_json::array();
    for (NodeId v = 0; v < dag.num_nodes(); ++v) {
        const auto& w = dag.coord(v);
        j["nodes"].push_back({{"id", v}, {"layer", dag.layer_of(v)}, {"lat", w.lat}, {"lon", w.lon}, {"alt_ft", w.alt_ft}});
    }
    j["edges"] = ordered_json::array();
    for (const Edge& e : dag.edges())
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"weight_kg", e.weight ? ordered_json(*e.weight) : ordered_json(nullptr)}});
    return j;
}

std::string edges_csv(const PipelineResult& r) {
    std::ostringstream os;
    os << "from,to,distance_m,gamma_rad,mean_altitude_m,density_kg_m3,drag_N,thrust_N,fuel_flow_kg_s,fuel_kg\n";
    const auto edges = r.dag.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& b = r.breakdowns[i];
        os << edges[i].from << ',' << edges[i].to << ',' << fmt(b.distance_m) << ',' << fmt(b.gamma_rad) << ','
           << fmt(b.mean_altitude_m) << ',' << fmt(b.density) << ',' << fmt(b.drag_n) << ',' << fmt(b.thrust_n)
           << ',' << fmt(b.fuel_flow_kg_s) << ',' << fmt(b.fuel_kg) << '\n';
    }
    return os.str();
}

std::string plot_csv(const PipelineResult& r) {
    std::ostringstream os;
    os << "path,seq,node,lat,lon,alt_ft\n";
    auto emit = [&](std::string_view name, const std::vector<NodeId>& path) {
        for (std::size_t i = 0; i < path.size(); ++i) {
            const auto& w = r.dag.coord(path[i]);
            os << name << ',' << i << ',' << path[i] << ',' << fmt(w.lat) << ',' << fmt(w.lon) << ','
               << fmt(w.alt_ft) << '\n';
        }
    };
    // The original route occupies the first node of every layer.
    std::vector<NodeId> original;
    for (const auto& layer : r.dag.layers()) original.push_back(layer.front());
    emit("original", original);
    if (r.classical) emit("classical", extract_path(*r.classical, r.dag.sink()));
    if (r.quantum) emit("quantum", extract_path(*r.quantum, r.dag.sink()));
    return os.str();
}

std::string gate_counts_csv(const std::vector<std::pair<std::string, GateCounts>>& circuits) {
    std::ostringstream os;
    os << "circuit_id,gate_name,count\n";
    for (const auto& [id, counts] : circuits)
        for (std::size_t i = 0; i < kNumBasisGates; ++i)
            os << id << ',' << basis_name(static_cast<BasisGate>(i)) << ',' << counts.n[i] << '\n';
    return os.str();
}

std::string cost_csv(const std::vector<CostReport>& reports) {
    std::ostringstream os;
    os << "modality,gate,count,unit_time_s,subtotal_s\n";
    for (const auto& r : reports) {
        for (const auto& l : r.lines)
            os << r.modality << ',' << basis_name(l.gate) << ',' << l.count << ',' << fmt(l.unit_time_s) << ','
               << fmt(l.subtotal_s) << '\n';
        os << r.modality << ",TOTAL," << r.counts.total() << ",," << fmt(r.total_s) << '\n';
    }
    return os.str();
}

std::size_t max_queue(const SsspReport& rep) {
    std::size_t m = 0;
    for (const auto& s : rep.qmf_trace) m = std::max(m, s.queue_size);
    return m;
}

}  // namespace

Solver parse_solver(std::string_view name) {
    if (name == "classical") return Solver::Classical;
    if (name == "quantum") return Solver::Quantum;
    if (name == "both") return Solver::Both;
    throw PipelineError("config", "unknown solver '" + std::string(name) + "'");
}

std::string_view solver_name(Solver s) {
    switch (s) {
        case Solver::Classical: return "classical";
        case Solver::Quantum: return "quantum";
        case Solver::Both: return "both";
    }
    return "?";
}

PipelineConfig parse_pipeline_config(std::string_view document, const fs::path& base_dir) {
    const auto doc = parse_or_throw(document, "pipeline config");
    if (!doc.is_object()) throw PipelineError("config", "pipeline config must be a JSON object");
    PipelineConfig c;
    try {
        if (!doc.contains("route")) throw PipelineError("config", "pipeline config needs 'route'");
        c.route_file = resolve(base_dir, doc["route"].get<std::string>());
        c.midpoints = doc.value("midpoints", c.midpoints);
        apply_common(doc, base_dir, c);
    } catch (const nlohmann::json::exception& e) {
        throw PipelineError("config", std::string("pipeline config: ") + e.what());
    }
    return c;
}

PipelineConfig load_pipeline_config(const fs::path& path) {
    return parse_pipeline_config(read_file(path), path.parent_path());
}

PipelineResult run_pipeline(const PipelineConfig& config, Stage stage) {
    PipelineResult r;
    r.route = stage_guard("ingest", [&] { return load_route_file(config.route_file); });

    stage_guard("grid", [&] {
        const Route dense = insert_midpoints(r.route, config.midpoints);
        AltitudeProfile profile = config.altitude_profile;
        profile.cruise_altitude_ft = r.route.max_altitude_ft;
        r.original = apply_altitude_profile(dense.waypoints, profile);
        PerturbationSpec spec = config.perturbation;
        spec.seed = mix_seed(config.seed, 1);
        r.perturbed = perturb_route(r.original, spec);
        r.dag = build_dag(r.original, r.perturbed);
    });
    if (stage == Stage::Grid) return r;

    stage_guard("weigh", [&] {
        const AircraftModel aircraft = config.aircraft_file ? load_aircraft_file(*config.aircraft_file) : AircraftModel{};
        r.breakdowns = edge_breakdowns(r.dag, aircraft, AtmosphereModel{});
        std::vector<double> weights(r.breakdowns.size());
        for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = r.breakdowns[i].fuel_kg;
        r.dag = r.dag.with_weights(weights);
    });
    if (stage == Stage::Weigh) return r;

    std::optional<DecompositionTable> table;
    stage_guard("solve", [&] {
        if (config.decomposition_file) table = DecompositionTable::from_file(*config.decomposition_file);
        if (config.solver != Solver::Quantum) r.classical = dijkstra_classical(r.dag, r.dag.source());
        if (config.solver != Solver::Classical) {
            QuantumDijkstraConfig qc;
            qc.qmf = config.qmf;
            qc.qmf.decomposition = table ? &*table : nullptr;
            qc.seed = mix_seed(config.seed, 2);
            r.quantum = dijkstra_quantum(r.dag, r.dag.source(), qc);
        }
    });
    if (stage == Stage::Solve) return r;

    stage_guard("estimate", [&] {
        const auto tables = config.modality_file ? load_modality_tables_file(*config.modality_file)
                                                 : builtin_modality_tables();
        if (tables.empty()) throw EstimateError("no modality tables");
        if (r.quantum && r.quantum->qmf_stats) r.executed_counts = r.quantum->qmf_stats->gate_counts;
        r.costs = compare_modalities(r.executed_counts, tables);
        const auto& fastest = r.costs.front();
        const auto it = std::find_if(tables.begin(), tables.end(),
                                     [&](const ModalityGateTimes& t) { return t.modality == fastest.modality; });
        r.crossover_modality = it->modality;
        r.crossover = find_crossover(*it, config.classical, 2, 256);
    });
    return r;
}

void write_bundle(const PipelineResult& r, const PipelineConfig& config, Stage stage) {
    stage_guard("output", [&] {
        const fs::path& out = config.out_dir;
        fs::create_directories(out);

        Route dense = r.route;
        dense.waypoints = r.original;
        write_text(out / "route_dense.json", serialize_route(dense) + "\n");

        ordered_json summary;
        summary["route"] = {{"origin", r.route.origin}, {"destination", r.route.destination}};
        summary["seed"] = config.seed;
        summary["waypoints"] = r.route.waypoints.size();
        summary["midpoints"] = config.midpoints;
        summary["distance_km"] = path_length(r.route.waypoints);
        summary["layers_total"] = r.dag.num_layers();
        summary["copies"] = config.perturbation.copies;
        summary["num_nodes"] = r.dag.num_nodes();
        summary["num_edges"] = r.dag.num_edges();
        summary["density"] = density(r.dag);

        if (stage != Stage::Grid) write_text(out / "edges.csv", edges_csv(r));
        write_json(out / "grid.json", grid_json(r, config));

        if (stage == Stage::Solve || stage == Stage::Estimate) {
            if (r.classical) {
                const auto j = sssp_json(r, *r.classical, "classical");
                write_json(out / "sssp_classical.json", j);
                write_text(out / "path_classical.csv", path_csv(r.dag, extract_path(*r.classical, r.dag.sink())));
                summary["classical_fuel_kg"] = j["path_weight_kg"];
            }
            if (r.quantum) {
                const auto j = sssp_json(r, *r.quantum, "quantum");
                write_json(out / "sssp_quantum.json", j);
                write_text(out / "path_quantum.csv", path_csv(r.dag, extract_path(*r.quantum, r.dag.sink())));
                summary["quantum_fuel_kg"] = j["path_weight_kg"];
                summary["qmf_verify"] = config.qmf.verify;

                ordered_json calls = ordered_json::array();
                for (const auto& s : r.quantum->qmf_trace)
                    calls.push_back({{"N", s.queue_size},
                                     {"rounds", s.rounds},
                                     {"oracle_invocations", s.oracle_invocations},
                                     {"iterations", s.iterations},
                                     {"shots", s.shots},
                                     {"verified", s.verified},
                                     {"min_index", s.extracted}});
                write_json(out / "qmf_stats.json", calls);
            }
            write_text(out / "plot_data.csv", plot_csv(r));
        }

        if (stage == Stage::Estimate) {
            std::vector<std::pair<std::string, GateCounts>> circuits{{"qmf_executed", r.executed_counts}};
            if (r.quantum) {
                const std::size_t q = std::max<std::size_t>(max_queue(*r.quantum), 2);
                circuits.emplace_back("qmf_reference_N" + std::to_string(q), qmf_reference_counts(q));
            }
            write_text(out / "gate_counts.csv", gate_counts_csv(circuits));
            write_text(out / "cost_report.csv", cost_csv(r.costs));

            ordered_json costs = ordered_json::array();
            const std::uint64_t shots = config.qmf.shots_per_round;
            for (const auto& c : r.costs)
                costs.push_back({{"modality", c.modality},
                                 {"total_per_circuit_s", c.total_s},
                                 {"total_per_shot_s", c.total_s * static_cast<double>(shots)}});
            ordered_json cost_summary;
            cost_summary["ranking"] = costs;
            cost_summary["shots_per_round"] = shots;
            cost_summary["interpretations"] = {
                {"total_per_circuit_s", "each executed round circuit, including prep and measurement, counted once"},
                {"total_per_shot_s", "each round circuit re-run once per shot"}};
            cost_summary["classical_cost_model"] = {{"per_comparison_s", config.classical.per_comparison_s},
                                                    {"overhead_s", config.classical.overhead_s},
                                                    {"placeholder", true}};
            if (r.classical)
                cost_summary["classical_scan_s"] = config.classical.overhead_s +
                                                   static_cast<double>(r.classical->scan_comparisons) *
                                                       config.classical.per_comparison_s;
            cost_summary["crossover"] = {{"modality", r.crossover_modality},
                                         {"range", {2, 256}},
                                         {"N", r.crossover ? ordered_json(r.crossover->n) : ordered_json("none in range")}};
            if (r.crossover) {
                cost_summary["crossover"]["quantum_s"] = r.crossover->quantum_s;
                cost_summary["crossover"]["classical_s"] = r.crossover->classical_s;
            }
            write_json(out / "cost_summary.json", cost_summary);
            for (const auto& c : r.costs) summary["estimated_s"][c.modality] = c.total_s;
        }
        write_json(out / "summary.json", summary);
    });
}

// --- benchmark -------------------------------------------------------------

BenchmarkConfig load_benchmark_config(const fs::path& path) {
    const auto doc = parse_or_throw(read_file(path), "benchmark config");
    const fs::path base = path.parent_path();
    BenchmarkConfig bc;
    try {
        apply_common(doc, base, bc.base);
        if (!doc.contains("routes") || !doc["routes"].is_array())
            throw PipelineError("config", "benchmark config needs a 'routes' array");
        for (const auto& r : doc["routes"]) {
            BenchmarkRoute br;
            br.name = r.at("name").get<std::string>();
            br.category = r.value("category", std::string("uncategorized"));
            br.file = resolve(base, r.at("file").get<std::string>());
            br.midpoints = r.value("midpoints", std::size_t{0});
            bc.routes.push_back(std::move(br));
        }
    } catch (const nlohmann::json::exception& e) {
        throw PipelineError("config", std::string("benchmark config: ") + e.what());
    }
    return bc;
}

BenchmarkRow benchmark_route(const PipelineConfig& base, const BenchmarkRoute& route) {
    BenchmarkRow row;
    row.route = route.name;
    row.category = route.category;
    row.midpoints = route.midpoints;
    try {
        PipelineConfig c = base;
        c.route_file = route.file;
        c.midpoints = route.midpoints;
        c.solver = Solver::Both;
        const auto r = run_pipeline(c, Stage::Estimate);
        row.waypoints = r.route.waypoints.size();
        row.distance_km = path_length(r.route.waypoints);
        row.layers = r.dag.num_layers();
        row.nodes = r.dag.num_nodes();
        row.edges = r.dag.num_edges();
        row.density = density(r.dag);
        row.classical_fuel_kg = path_weight(r.dag, extract_path(*r.classical, r.dag.sink()));
        row.quantum_fuel_kg = path_weight(r.dag, extract_path(*r.quantum, r.dag.sink()));
        row.qmf_oracle_calls = r.quantum->qmf_stats->oracle_invocations;
        for (const auto& cost : r.costs) row.modality_seconds[cost.modality] = cost.total_s;
    } catch (const PipelineError& e) {
        row.status = "error: stage=" + e.stage() + ": " + e.what();
    } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
    }
    return row;
}

BenchmarkTable run_benchmark(const BenchmarkConfig& config) {
    std::vector<std::future<BenchmarkRow>> jobs;
    jobs.reserve(config.routes.size());
    for (const auto& route : config.routes)
        jobs.push_back(std::async(std::launch::async, [&config, &route] { return benchmark_route(config.base, route); }));

    BenchmarkTable table;
    for (auto& j : jobs) table.rows.push_back(j.get());

    for (const auto& row : table.rows) {
        auto it = std::find_if(table.averages.begin(), table.averages.end(),
                               [&](const CategoryAverage& a) { return a.category == row.category; });
        if (it == table.averages.end()) {
            CategoryAverage fresh;
            fresh.category = row.category;
            table.averages.push_back(std::move(fresh));
            it = table.averages.end() - 1;
        }
        if (row.status != "ok") continue;
        ++it->routes;
        it->distance_km += row.distance_km;
        it->waypoints += static_cast<double>(row.waypoints);
        it->midpoints += static_cast<double>(row.midpoints);
        it->nodes += static_cast<double>(row.nodes);
        it->edges += static_cast<double>(row.edges);
        it->classical_fuel_kg += row.classical_fuel_kg;
        it->quantum_fuel_kg += row.quantum_fuel_kg;
        it->qmf_oracle_calls += static_cast<double>(row.qmf_oracle_calls);
        for (const auto& [m, s] : row.modality_seconds) it->modality_seconds[m] += s;
    }
    for (auto& a : table.averages) {
        if (a.routes == 0) continue;
        const double n = static_cast<double>(a.routes);
        for (double* f : {&a.distance_km, &a.waypoints, &a.midpoints, &a.nodes, &a.edges, &a.classical_fuel_kg,
                          &a.quantum_fuel_kg, &a.qmf_oracle_calls})
            *f /= n;
        for (auto& [m, s] : a.modality_seconds) s /= n;
    }
    return table;
}

std::string benchmark_csv(const BenchmarkTable& table) {
    std::vector<std::string> modalities;
    for (const auto& row : table.rows)
        for (const auto& [m, s] : row.modality_seconds)
            if (std::find(modalities.begin(), modalities.end(), m) == modalities.end()) modalities.push_back(m);
    std::sort(modalities.begin(), modalities.end());

    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };

    std::ostringstream os;
    os << "kind,route,category,status,distance_km,waypoints,midpoints,layers,nodes,edges,density,"
          "classical_fuel_kg,quantum_fuel_kg,qmf_oracle_calls";
    for (const auto& m : modalities) os << ',' << m << "_s";
    os << '\n';
    for (const auto& r : table.rows) {
        os << "route," << quote(r.route) << ',' << quote(r.category) << ',' << quote(r.status) << ','
           << fixed2(r.distance_km) << ',' << r.waypoints << ',' << r.midpoints << ',' << r.layers << ',' << r.nodes
           << ',' << r.edges << ',' << fmt(r.density) << ',' << fixed2(r.classical_fuel_kg) << ','
           << fixed2(r.quantum_fuel_kg) << ',' << r.qmf_oracle_calls;
        for (const auto& m : modalities) {
            auto it = r.modality_seconds.find(m);
            os << ',' << (it == r.modality_seconds.end() ? std::string() : fmt(it->second));
        }
        os << '\n';
    }
    for (const auto& a : table.averages) {
        os << "average,," << quote(a.category) << ',' << a.routes << "_routes," << fixed2(a.distance_km) << ','
           << fixed2(a.waypoints) << ',' << fixed2(a.midpoints) << ",," << fixed2(a.nodes) << ',' << fixed2(a.edges)
           << ",," << fixed2(a.classical_fuel_kg) << ',' << fixed2(a.quantum_fuel_kg) << ','
           << fixed2(a.qmf_oracle_calls);
        for (const auto& m : modalities) {
            auto it = a.modality_seconds.find(m);
            os << ',' << (it == a.modality_seconds.end() ? std::string() : fmt(it->second));
        }
        os << '\n';
    }
    return os.str();
}

void write_benchmark(const BenchmarkTable& table, const fs::path& out_dir) {
    stage_guard("output", [&] {
        fs::create_directories(out_dir);
        write_text(out_dir / "bench.csv", benchmark_csv(table));

        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const auto& r : table.rows)
            j["rows"].push_back({{"route", r.route},
                                 {"category", r.category},
                                 {"status", r.status},
                                 {"distance_km", r.distance_km},
                                 {"waypoints", r.waypoints},
                                 {"midpoints", r.midpoints},
                                 {"layers", r.layers},
                                 {"nodes", r.nodes},
                                 {"edges", r.edges},
                                 {"density", r.density},
                                 {"classical_fuel_kg", r.classical_fuel_kg},
                                 {"quantum_fuel_kg", r.quantum_fuel_kg},
                                 {"qmf_oracle_calls", r.qmf_oracle_calls},
                                 {"modality_seconds", r.modality_seconds}});
        j["averages"] = ordered_json::array();
        for (const auto& a : table.averages)
            j["averages"].push_back({{"category", a.category},
                                     {"routes", a.routes},
                                     {"distance_km", a.distance_km},
                                     {"waypoints", a.waypoints},
                                     {"midpoints", a.midpoints},
                                     {"nodes", a.nodes},
                                     {"edges", a.edges},
                                     {"classical_fuel_kg", a.classical_fuel_kg},
                                     {"quantum_fuel_kg", a.quantum_fuel_kg},
                                     {"qmf_oracle_calls", a.qmf_oracle_calls},
                                     {"modality_seconds", a.modality_seconds}});
        write_json(out_dir / "bench.json", j);
    });
}

}  // namespace qroute
