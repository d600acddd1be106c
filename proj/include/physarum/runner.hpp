#pragma once

#include <algorithm>
#include <cstdio>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "physarum/contour.hpp"
#include "physarum/io.hpp"
#include "physarum/presets.hpp"
#include "physarum/scenario.hpp"

namespace physarum {

// Stability rule shared by the early-stop detector and the result analysis:
// over the final `window` steps the series deviates from its last value by
// less than `tol` (relative to that value, floor 1).
inline bool series_stable(const std::vector<long>& series, long window = 1000,
                          double tol = 0.01) {
    const long n = static_cast<long>(series.size());
    if (n <= window) return false;
    const double final_v = static_cast<double>(series.back());
    const double scale = std::max(std::abs(final_v), 1.0);
    for (long i = n - 1 - window; i < n; ++i)
        if (std::abs(static_cast<double>(series[static_cast<std::size_t>(i)]) - final_v) >=
            tol * scale)
            return false;
    return true;
}

inline bool population_stable(const std::vector<long>& population, long window = 1000,
                              double tol = 0.01) {
    return series_stable(population, window, tol);
}

struct RunOptions {
    std::optional<long> steps_override;       // exact budget, disables early stop
    std::optional<long> frames_every_override;
    fs::path out_dir;                         // empty: keep results in memory only
};

struct RunResult {
    Scenario scenario;  // effective configuration (budget/frames as executed)
    std::uint64_t seed = 0;
    long steps_executed = 0;
    bool stabilized = false;
    std::vector<long> population;          // one entry per step, index 0 = initial
    std::vector<double> hull_area_checkpoints;  // particle-cloud hull area every 100 steps
    PointSet final_points;
    BlobMask final_blob;
    std::optional<ShapeMetrics> metrics;
    std::optional<Polygon> cloud_hull;
    std::optional<Polygon> node_hull;
    std::optional<Polygon> concave_hull;
    std::optional<EdgeList> node_mst;
    std::vector<bool> node_active;
};

namespace detail {

inline std::string frame_name(const char* prefix, long step) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_%07ld.pgm", prefix, step);
    return buf;
}

inline double cloud_hull_area(const PointSet& points) {
    const std::optional<Polygon> hull = convex_hull(points);
    return hull ? hull->area() : 0.0;
}

}  // namespace detail

// Builds the world, steps it for the budget (with optional early stop once
// both the population and the particle-cloud hull area are stable for 1000
// steps), and writes the configured artifacts. manifest.json is written last
// with status "complete"; failures leave a manifest with status "partial".
inline RunResult run_scenario(const Scenario& scenario, std::uint64_t seed,
                              const RunOptions& options = {}) {
    RunResult result;
    result.scenario = scenario;
    result.seed = seed;

    const long budget = options.steps_override.value_or(scenario.step_budget);
    const long frames_every =
        options.frames_every_override.value_or(scenario.outputs.frames_every);
    const bool early_stop = scenario.stop_on_stable && !options.steps_override;
    result.scenario.step_budget = budget;
    result.scenario.outputs.frames_every = frames_every;

    const bool to_disk = !options.out_dir.empty();
    if (to_disk) fs::create_directories(options.out_dir);

    const auto finalize_manifest = [&](const char* status) {
        if (!to_disk) return;
        json manifest;
        manifest["scenario"] = scenario_to_json(result.scenario);
        manifest["seed"] = seed;
        manifest["steps_executed"] = result.steps_executed;
        manifest["stabilized"] = result.stabilized;
        manifest["status"] = status;
        write_json(options.out_dir / "manifest.json", manifest);
    };

    try {
        World world = build_world(scenario, seed);

        const auto write_frames = [&](long step) {
            if (!to_disk || frames_every <= 0) return;
            write_pgm(options.out_dir / detail::frame_name("frame", step), world.trail(),
                      scenario.outputs.display_gain);
            write_pgm(options.out_dir / detail::frame_name("occupancy", step),
                      world.blob_mask());
        };

        result.population.push_back(world.population());
        result.hull_area_checkpoints.push_back(
            detail::cloud_hull_area(world.particle_points()));
        write_frames(0);

        std::size_t schedule_next = 0;
        long last_frame_step = 0;
        for (long t = 0; t < budget; ++t) {
            while (schedule_next < scenario.gmax_schedule.size() &&
                   scenario.gmax_schedule[schedule_next].at_step == world.step_count()) {
                world.set_growth_max(scenario.gmax_schedule[schedule_next].value);
                ++schedule_next;
            }
            world.step();
            result.population.push_back(world.population());
            if (frames_every > 0 && world.step_count() % frames_every == 0) {
                write_frames(world.step_count());
                last_frame_step = world.step_count();
            }
            if (world.step_count() % 100 == 0) {
                result.hull_area_checkpoints.push_back(
                    detail::cloud_hull_area(world.particle_points()));
                if (early_stop && world.step_count() >= 1100 &&
                    population_stable(result.population)) {
                    // Hull-area checkpoints cover 1000 steps with 11 entries.
                    const auto& areas = result.hull_area_checkpoints;
                    bool area_stable = areas.size() >= 11;
                    if (area_stable) {
                        const double final_a = areas.back();
                        const double scale = std::max(final_a, 1.0);
                        for (std::size_t i = areas.size() - 11; i < areas.size(); ++i)
                            if (std::abs(areas[i] - final_a) >= 0.01 * scale)
                                area_stable = false;
                    }
                    if (area_stable) {
                        result.stabilized = true;
                        break;
                    }
                }
            }
        }
        result.steps_executed = world.step_count();
        if (!result.stabilized) result.stabilized = population_stable(result.population);

        result.final_points = world.particle_points();
        result.final_blob = world.blob_mask();
        for (const StimulusNode& n : world.nodes()) result.node_active.push_back(n.active);

        const PointSet node_points = scenario.nodes.resolved_points();
        if (world.population() > 0) {
            result.metrics = shape_metrics(result.final_blob);
            result.cloud_hull = convex_hull(result.final_points);
            if (node_points.size() >= 3) {
                try {
                    result.concave_hull =
                        extract_concave_hull(result.final_blob, node_points, 3.0);
                } catch (const BlobDisconnected&) {
                    result.concave_hull.reset();
                }
            }
        }
        if (node_points.size() >= 3) result.node_hull = convex_hull(node_points);
        if (node_points.size() >= 2) result.node_mst = euclidean_mst(node_points);

        if (to_disk) {
            if (frames_every > 0 && last_frame_step != world.step_count())
                write_frames(world.step_count());
            if (scenario.outputs.population_csv)
                write_population_csv(options.out_dir / "population.csv", result.population);
            write_pgm(options.out_dir / "final_occupancy.pgm", result.final_blob);
            write_pgm(options.out_dir / "final_trail.pgm", world.trail(),
                      scenario.outputs.display_gain);
            json points = json::array();
            for (const Vec2& p : result.final_points) points.push_back({p.x, p.y});
            write_json(options.out_dir / "points.json", json{{"points", points}});

            if (scenario.outputs.hull_json) {
                json hulls;
                hulls["cloud_hull"] =
                    result.cloud_hull ? polygon_json(*result.cloud_hull) : json(nullptr);
                hulls["node_hull"] =
                    result.node_hull ? polygon_json(*result.node_hull) : json(nullptr);
                hulls["concave_hull"] =
                    result.concave_hull ? polygon_json(*result.concave_hull) : json(nullptr);
                write_json(options.out_dir / "hull.json", hulls);
                if (result.node_mst)
                    write_json(options.out_dir / "mst.json", edgelist_json(*result.node_mst));
            }
            if (scenario.outputs.metrics_json) {
                json m;
                m["final_population"] = result.population.back();
                m["steps_executed"] = result.steps_executed;
                m["stabilized"] = result.stabilized;
                if (result.metrics) {
                    m["area"] = result.metrics->area;
                    m["perimeter"] = result.metrics->perimeter;
                    m["concavity"] = result.metrics->concavity;
                }
                json touched = json::array();
                for (const bool a : result.node_active) touched.push_back(a);
                m["nodes_active"] = touched;
                write_json(options.out_dir / "metrics.json", m);
            }
        }
        finalize_manifest("complete");
    } catch (...) {
        finalize_manifest("partial");
        throw;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Result-directory comparison against classical oracles

struct CompareReport {
    bool pass = false;
    json report;
};

// Hausdorff distance between two convex hull boundaries, sampled at the
// vertices of each polygon against the other polygon's boundary. A staircase
// hull of a rasterised region measures within one cell of the region's true
// hull under this metric.
inline double hull_hausdorff(const Polygon& a, const Polygon& b) {
    double worst = 0.0;
    for (const Vec2& v : a.vertices)
        worst = std::max(worst, polygon_boundary_distance(b, v));
    for (const Vec2& v : b.vertices)
        worst = std::max(worst, polygon_boundary_distance(a, v));
    return worst;
}

namespace detail {

struct LoadedRun {
    Scenario scenario;
    BlobMask blob;
    PointSet points;
    PointSet nodes;
};

inline LoadedRun load_run(const fs::path& dir) {
    const fs::path manifest_path = dir / "manifest.json";
    if (!fs::exists(manifest_path))
        throw IoError("no manifest.json in " + dir.string());
    const json manifest = read_json(manifest_path);
    LoadedRun run;
    run.scenario = scenario_from_json(manifest.at("scenario"));
    const fs::path occ = dir / "final_occupancy.pgm";
    if (!fs::exists(occ)) throw IoError("no final_occupancy.pgm in " + dir.string());
    run.blob = read_pgm_mask(occ);
    const fs::path pts = dir / "points.json";
    if (!fs::exists(pts)) throw IoError("no points.json in " + dir.string());
    const json points_doc = read_json(pts);
    for (const json& p : points_doc.at("points"))
        run.points.push_back({p[0].get<double>(), p[1].get<double>()});
    run.nodes = run.scenario.nodes.resolved_points();
    return run;
}

inline double min_distance_to_points(Vec2 p, const PointSet& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2& q : pts) best = std::min(best, distance(p, q));
    return best;
}

}  // namespace detail

// Convex-hull agreement: the emergent cloud hull must match the node hull up
// to 2*SO in Hausdorff distance and every node must lie inside the cloud hull
// or within SO of its boundary. Repellent layouts additionally require every
// particle to keep the contact radius clear of every node.
inline CompareReport compare_convex(const fs::path& dir) {
    const detail::LoadedRun run = detail::load_run(dir);
    CompareReport out;
    json& r = out.report;
    r["oracle"] = "convex";

    const std::optional<Polygon> cloud = convex_hull(run.points);
    const std::optional<Polygon> oracle = convex_hull(run.nodes);
    if (!cloud || !oracle) {
        r["error"] = "degenerate hull (cloud or nodes)";
        return out;
    }
    const double so = run.scenario.params.so_max;
    const double h = hull_hausdorff(*cloud, *oracle);
    r["hausdorff"] = h;
    r["hausdorff_limit"] = 2.0 * so;

    bool nodes_in_hull = true;
    for (const Vec2& n : run.nodes) {
        if (polygon_contains(*cloud, n, true)) continue;
        if (polygon_boundary_distance(*cloud, n) <= so) continue;
        nodes_in_hull = false;
        break;
    }
    r["nodes_within_hull"] = nodes_in_hull;

    double coverage = 0.0;
    for (const Vec2& n : run.nodes)
        if (detail::min_distance_to_points(n, run.points) <= 3.0) coverage += 1.0;
    r["node_coverage_fraction"] = run.nodes.empty() ? 0.0 : coverage / run.nodes.size();
    r["concavity"] = shape_metrics(run.blob).concavity;

    bool clearance_ok = true;
    if (run.scenario.nodes.polarity == Polarity::repellent) {
        double min_dist = std::numeric_limits<double>::infinity();
        for (const Vec2& n : run.nodes)
            min_dist = std::min(min_dist, detail::min_distance_to_points(n, run.points));
        clearance_ok = min_dist >= run.scenario.nodes.contact_radius;
        r["min_node_particle_distance"] = min_dist;
        r["required_clearance"] = run.scenario.nodes.contact_radius;
    }
    out.pass = h <= 2.0 * so && nodes_in_hull && clearance_ok;
    r["pass"] = out.pass;
    return out;
}

// MST agreement: the blob must be one 8-connected component covering every
// node (an occupied cell within 2 cells of each node position).
inline CompareReport compare_mst(const fs::path& dir) {
    const detail::LoadedRun run = detail::load_run(dir);
    CompareReport out;
    json& r = out.report;
    r["oracle"] = "mst";

    const int components = count_components_8(run.blob);
    r["components"] = components;
    PointSet occupied;
    for (int y = 0; y < run.blob.height(); ++y)
        for (int x = 0; x < run.blob.width(); ++x)
            if (run.blob.at(x, y))
                occupied.push_back({static_cast<double>(x), static_cast<double>(y)});
    bool covered = !run.nodes.empty();
    for (const Vec2& n : run.nodes)
        if (occupied.empty() || detail::min_distance_to_points(n, occupied) > 2.0) {
            covered = false;
            break;
        }
    r["all_nodes_covered"] = covered;
    if (run.nodes.size() >= 2)
        r["mst_total_length"] = euclidean_mst(run.nodes).total_length();
    out.pass = components == 1 && covered;
    r["pass"] = out.pass;
    return out;
}

// Footprint extraction: the blob perimeter must yield a concave-hull polygon
// whose vertices are all stimulus nodes.
inline CompareReport compare_alpha(const fs::path& dir) {
    const detail::LoadedRun run = detail::load_run(dir);
    CompareReport out;
    json& r = out.report;
    r["oracle"] = "alpha";
    try {
        const std::optional<Polygon> hull = extract_concave_hull(run.blob, run.nodes, 3.0);
        if (!hull) {
            r["error"] = "fewer than 3 peripheral nodes on the blob boundary";
            return out;
        }
        r["concave_hull"] = polygon_json(*hull);
        r["vertex_count"] = hull->vertices.size();
        bool all_nodes = true;
        for (const Vec2& v : hull->vertices)
            if (detail::min_distance_to_points(v, run.nodes) > 1e-9) {
                all_nodes = false;
                break;
            }
        r["vertices_are_nodes"] = all_nodes;
        r["concavity"] = shape_metrics(run.blob).concavity;
        out.pass = all_nodes;
    } catch (const BlobDisconnected& e) {
        r["error"] = e.what();
        return out;
    }
    r["pass"] = out.pass;
    return out;
}

inline CompareReport compare(const fs::path& dir, const std::string& oracle) {
    CompareReport report;
    if (oracle == "convex") {
        report = compare_convex(dir);
    } else if (oracle == "mst") {
        report = compare_mst(dir);
    } else if (oracle == "alpha") {
        report = compare_alpha(dir);
    } else {
        throw ConfigError("unknown oracle: " + oracle + " (expected convex, mst or alpha)");
    }
    write_json(dir / ("compare_" + oracle + ".json"), report.report);
    return report;
}

// ---------------------------------------------------------------------------
// G_max sweep expansion

struct SweepRow {
    int gmax = 0;
    std::uint64_t seed = 0;
    long final_population = 0;
    double concavity = 0.0;
};

inline Scenario sweep_variant(const Scenario& base, int gmax) {
    Scenario s = base;
    s.gmax_sweep.clear();
    s.sweep_step_budgets.clear();
    if (!s.params.growth) throw ConfigError("G_max sweep requires growth parameters");
    s.params.growth->max_count = gmax;
    const auto budget = base.sweep_step_budgets.find(gmax);
    if (budget != base.sweep_step_budgets.end()) s.step_budget = budget->second;
    s.name = base.name + "-g" + std::to_string(gmax);
    return s;
}

// One run per (G_max value, seed); rows come back in sweep order. `jobs`
// bounds the number of concurrently executing runs.
inline std::vector<SweepRow> run_gmax_sweep(const Scenario& base,
                                            const std::vector<std::uint64_t>& seeds,
                                            const fs::path& out_dir, int jobs = 0) {
    if (base.gmax_sweep.empty())
        throw ConfigError("scenario " + base.name + " defines no G_max sweep");
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    struct Task {
        int gmax;
        std::uint64_t seed;
        Scenario scenario;
        fs::path dir;
    };
    std::vector<Task> tasks;
    for (const int gmax : base.gmax_sweep) {
        for (const std::uint64_t seed : seeds) {
            fs::path dir;
            if (!out_dir.empty())
                dir = out_dir / ("gmax" + std::to_string(gmax) + "_seed" +
                                 std::to_string(seed));
            tasks.push_back({gmax, seed, sweep_variant(base, gmax), dir});
        }
    }

    std::vector<SweepRow> rows(tasks.size());
    for (std::size_t begin = 0; begin < tasks.size();
         begin += static_cast<std::size_t>(jobs)) {
        const std::size_t end =
            std::min(tasks.size(), begin + static_cast<std::size_t>(jobs));
        std::vector<std::future<SweepRow>> batch;
        for (std::size_t i = begin; i < end; ++i) {
            batch.push_back(std::async(std::launch::async, [&tasks, i]() {
                const Task& task = tasks[i];
                RunOptions options;
                options.out_dir = task.dir;
                const RunResult result = run_scenario(task.scenario, task.seed, options);
                SweepRow row;
                row.gmax = task.gmax;
                row.seed = task.seed;
                row.final_population = result.population.back();
                row.concavity = result.metrics ? result.metrics->concavity : 0.0;
                return row;
            }));
        }
        for (std::size_t i = begin; i < end; ++i) rows[i] = batch[i - begin].get();
    }

    if (!out_dir.empty()) {
        std::ofstream csv(out_dir / "sweep_summary.csv", std::ios::binary);
        if (!csv) throw IoError("cannot write sweep_summary.csv");
        csv << "gmax,seed,final_population,concavity\n";
        for (const SweepRow& row : rows)
            csv << row.gmax << "," << row.seed << "," << row.final_population << ","
                << row.concavity << "\n";
    }
    return rows;
}

}  // namespace physarum
