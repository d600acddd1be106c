#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "physarum/error.hpp"
#include "physarum/geom.hpp"
#include "physarum/params.hpp"
#include "physarum/pointsets.hpp"
#include "physarum/stimulus.hpp"
#include "physarum/world.hpp"

namespace physarum {

using json = nlohmann::json;

struct NodeLayout {
    std::string pointset;  // builtin name; empty when points are explicit
    PointSet points;       // explicit positions (ignored when pointset set)
    Polarity polarity = Polarity::attractant;
    Activation activation = Activation::always;
    ContactBehaviour contact = ContactBehaviour::none;
    double contact_radius = 3.0;
    // repellent lining of the arena boundary (0 = none): always-on repellent
    // stimuli spaced along the lattice rim, projecting proj_r
    double boundary_spacing = 0.0;
    double boundary_inset = 1.0;

    bool operator==(const NodeLayout&) const = default;

    PointSet resolved_points() const {
        return pointset.empty() ? points : builtin_pointset(pointset).points;
    }
};

struct IlluminationLayout {
    enum class Kind { none, protect_strokes };
    Kind kind = Kind::none;
    std::string pointset;  // shape whose strokes stay dark
    double margin = 8.0;
    bool literal_damping = false;  // damp by L_d instead of (1 - L_d)

    bool operator==(const IlluminationLayout&) const = default;
};

struct InoculationSpec {
    std::string kind = "random-everywhere";
    int site_index = 0;                 // single-site: node index when no explicit site
    std::optional<Vec2> site;           // single-site explicit position
    double radius = 3.0;                // single-site / at-nodes
    std::optional<Vec2> ring_centre;    // ring; nullopt = node centroid
    std::optional<double> ring_radius;  // ring; nullopt = max node distance + margin
    double ring_margin = 15.0;
    double thickness = 5.0;             // ring / on-edges
    std::optional<Polygon> region;      // solid-region; nullopt = hull of nodes
    std::optional<std::vector<Segment>> edges;  // on-edges; nullopt = MST of nodes

    bool operator==(const InoculationSpec&) const = default;
};

struct OutputSpec {
    long frames_every = 0;  // 0 = no frames
    bool population_csv = true;
    bool hull_json = true;
    bool metrics_json = true;
    double display_gain = 10.0;

    bool operator==(const OutputSpec&) const = default;
};

struct GmaxChange {
    long at_step = 0;
    int value = 0;
    bool operator==(const GmaxChange&) const = default;
};

// A named, parameter-complete experiment: one parameter record, stimulus and
// illumination layout, inoculation pattern, step budget and output requests.
struct Scenario {
    std::string name;
    int width = 200;
    int height = 200;
    ModelParams params;
    bool growth_enabled = false;
    bool shrink_enabled = false;
    bool illumination_enabled = false;
    NodeLayout nodes;
    IlluminationLayout illumination;
    InoculationSpec inoculation;
    long step_budget = 10000;
    bool stop_on_stable = true;
    std::vector<GmaxChange> gmax_schedule;
    std::vector<int> gmax_sweep;               // non-empty: expand into one run per value
    std::map<int, long> sweep_step_budgets;    // per-G_max budget overrides
    OutputSpec outputs;

    bool operator==(const Scenario&) const = default;
};

inline void validate_scenario(const Scenario& s) {
    s.params.validate();
    if (s.name.empty()) throw ConfigError("scenario name must not be empty");
    if (s.width < s.params.diffusion_window || s.height < s.params.diffusion_window)
        throw ConfigError("lattice must be at least D_w cells in each dimension");
    if (s.growth_enabled && !s.params.growth)
        throw ConfigError("growth requested but G_f/G_w/G_min/G_max are not set");
    if (s.shrink_enabled && !s.params.shrink)
        throw ConfigError("shrinkage requested but S_f/S_w/S_min/S_max are not set");
    if (s.illumination_enabled) {
        if (!s.params.illumination)
            throw ConfigError("illumination requested but L_w/L_d are not set");
        if (s.illumination.kind == IlluminationLayout::Kind::none)
            throw ConfigError("illumination requested but no mask layout given");
    }
    if (s.step_budget < 0) throw ConfigError("steps must be non-negative");
    if (s.outputs.frames_every < 0) throw ConfigError("frames_every must be non-negative");
    if (s.nodes.contact_radius < 0) throw ConfigError("contact_radius must be non-negative");
    if (!s.nodes.pointset.empty()) builtin_pointset(s.nodes.pointset);  // must exist

    const PointSet pts = s.nodes.resolved_points();
    const std::string& kind = s.inoculation.kind;
    if (kind != "single-site" && kind != "ring" && kind != "random-everywhere" &&
        kind != "at-nodes" && kind != "solid-region" && kind != "on-edges")
        throw ConfigError("unknown inoculation kind: " + kind);
    if (kind == "single-site" && !s.inoculation.site &&
        (s.inoculation.site_index < 0 ||
         s.inoculation.site_index >= static_cast<int>(pts.size())))
        throw ConfigError("single-site inoculation: site index out of range");
    if ((kind == "at-nodes" || (kind == "ring" && !s.inoculation.ring_centre) ||
         (kind == "solid-region" && !s.inoculation.region) ||
         (kind == "on-edges" && !s.inoculation.edges)) &&
        pts.empty())
        throw ConfigError(kind + " inoculation needs stimulus nodes");
    if (kind == "on-edges" && !s.inoculation.edges && pts.size() < 2)
        throw ConfigError("on-edges inoculation needs at least 2 nodes for the MST");
    if (kind == "solid-region" && !s.inoculation.region && pts.size() < 3)
        throw ConfigError("solid-region inoculation needs at least 3 nodes for the hull");

    if (!s.gmax_schedule.empty() && !s.growth_enabled)
        throw ConfigError("G_max schedule requires growth to be enabled");
    for (std::size_t i = 1; i < s.gmax_schedule.size(); ++i)
        if (s.gmax_schedule[i].at_step <= s.gmax_schedule[i - 1].at_step)
            throw ConfigError("G_max schedule steps must be strictly increasing");
    if (!s.gmax_sweep.empty() && !s.growth_enabled)
        throw ConfigError("G_max sweep requires growth to be enabled");
}

// ---------------------------------------------------------------------------
// Construction of the simulation state

inline std::vector<StimulusNode> build_nodes(const Scenario& s) {
    std::vector<StimulusNode> nodes;
    const PointSet pts = s.nodes.resolved_points();
    for (const Vec2& p : pts) {
        StimulusNode n;
        if (s.nodes.polarity == Polarity::attractant) {
            if (!s.params.attractant_projection)
                throw ConfigError("attractant nodes need proj_a");
            n = make_attractant(p.x, p.y, *s.params.attractant_projection,
                                s.nodes.activation);
        } else {
            if (!s.params.repellent_projection)
                throw ConfigError("repellent nodes need proj_r");
            n = make_repellent(p.x, p.y, *s.params.repellent_projection, s.nodes.contact);
        }
        n.activation = s.nodes.activation;
        n.active = (s.nodes.activation == Activation::always);
        n.contact = s.nodes.contact;
        n.contact_radius = s.nodes.contact_radius;
        nodes.push_back(n);
    }
    if (s.nodes.boundary_spacing > 0.0) {
        if (!s.params.repellent_projection)
            throw ConfigError("boundary repellents need proj_r");
        const double inset = s.nodes.boundary_inset;
        const double spacing = s.nodes.boundary_spacing;
        const double x1 = s.width - 1 - inset;
        const double y1 = s.height - 1 - inset;
        PointSet rim;
        for (double x = inset; x < x1; x += spacing) {
            rim.push_back({x, inset});
            rim.push_back({x1 - (x - inset), y1});
        }
        for (double y = inset; y < y1; y += spacing) {
            rim.push_back({x1, y});
            rim.push_back({inset, y1 - (y - inset)});
        }
        for (const Vec2& p : rim)
            nodes.push_back(make_repellent(p.x, p.y, *s.params.repellent_projection));
    }
    return nodes;
}

inline IlluminationMask build_mask(const Scenario& s) {
    if (!s.illumination_enabled || s.illumination.kind == IlluminationLayout::Kind::none)
        return {};
    const NamedShape shape = builtin_pointset(s.illumination.pointset.empty()
                                                  ? s.nodes.pointset
                                                  : s.illumination.pointset);
    if (shape.strokes.empty())
        throw ConfigError("illumination layout needs a shape with strokes: " + shape.name);
    Grid<std::uint8_t> dark = stroke_halo(shape.strokes, s.illumination.margin, s.width,
                                          s.height);
    Grid<std::uint8_t> lit(s.width, s.height, 0);
    for (int y = 0; y < s.height; ++y)
        for (int x = 0; x < s.width; ++x) lit.at(x, y) = dark.at(x, y) ? 0 : 1;
    return IlluminationMask(std::move(lit), s.params.illumination->window,
                            s.params.illumination->damping, s.illumination.literal_damping);
}

inline InoculationPattern build_inoculation(const Scenario& s) {
    const PointSet pts = s.nodes.resolved_points();
    const InoculationSpec& spec = s.inoculation;
    if (spec.kind == "single-site") {
        const Vec2 site = spec.site ? *spec.site
                                    : pts[static_cast<std::size_t>(spec.site_index)];
        return InoculationPattern::single_site(site, spec.radius);
    }
    if (spec.kind == "ring") {
        Vec2 centre{};
        if (spec.ring_centre) {
            centre = *spec.ring_centre;
        } else {
            for (const Vec2& p : pts) centre = centre + p;
            centre = centre * (1.0 / static_cast<double>(pts.size()));
        }
        double radius = 0.0;
        if (spec.ring_radius) {
            radius = *spec.ring_radius;
        } else {
            for (const Vec2& p : pts) radius = std::max(radius, distance(centre, p));
            radius += spec.ring_margin;
        }
        return InoculationPattern::ring(centre, radius, spec.thickness);
    }
    if (spec.kind == "random-everywhere") return InoculationPattern::random_everywhere();
    if (spec.kind == "at-nodes") return InoculationPattern::at_nodes(pts, spec.radius);
    if (spec.kind == "solid-region") {
        if (spec.region) return InoculationPattern::solid_region(*spec.region);
        const std::optional<Polygon> hull = convex_hull(pts);
        if (!hull) throw ConfigError("solid-region inoculation: node hull is degenerate");
        return InoculationPattern::solid_region(*hull);
    }
    if (spec.kind == "on-edges") {
        if (spec.edges) return InoculationPattern::on_edges(*spec.edges, spec.thickness);
        const EdgeList mst = euclidean_mst(pts);
        std::vector<Segment> segs;
        segs.reserve(mst.edges.size());
        for (const Edge& e : mst.edges)
            segs.push_back({mst.points[static_cast<std::size_t>(e.a)],
                            mst.points[static_cast<std::size_t>(e.b)]});
        return InoculationPattern::on_edges(std::move(segs), spec.thickness);
    }
    throw ConfigError("unknown inoculation kind: " + spec.kind);
}

// Builds and inoculates the world for one run. Mechanisms whose enable flag
// is off are stripped from the parameter record handed to the scheduler; the
// scenario keeps the full record.
inline World build_world(const Scenario& s, std::uint64_t seed) {
    validate_scenario(s);
    ModelParams run_params = s.params;
    if (!s.growth_enabled) run_params.growth.reset();
    if (!s.shrink_enabled) run_params.shrink.reset();
    World world(s.width, s.height, run_params, build_nodes(s), build_mask(s), seed);
    world.inoculate(build_inoculation(s));
    return world;
}

// ---------------------------------------------------------------------------
// JSON serialisation. Keys follow the parameter-table names verbatim; absent
// keys mean "mechanism not parameterised". Unknown keys are rejected.

namespace detail {

inline void check_keys(const json& obj, const char* context,
                       std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) {
                ok = true;
                break;
            }
        if (!ok)
            throw ConfigError(std::string("unknown key \"") + key + "\" in " + context);
    }
}

inline json vec2_json(Vec2 v) { return json::array({v.x, v.y}); }

inline Vec2 vec2_from(const json& j, const char* context) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(std::string(context) + ": expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline PointSet points_from(const json& j, const char* context) {
    PointSet ps;
    for (const json& e : j) ps.push_back(vec2_from(e, context));
    return ps;
}

}  // namespace detail

inline json params_to_json(const ModelParams& p) {
    json j;
    j["p"] = p.population;
    j["SA"] = p.sensor_angle;
    j["RA"] = p.rotation_angle;
    if (p.so_min == p.so_max) {
        j["SO"] = p.so_min;
    } else {
        j["SO_min"] = p.so_min;
        j["SO_max"] = p.so_max;
    }
    j["Dep_t"] = p.deposit;
    j["D_w"] = p.diffusion_window;
    j["D_d"] = p.diffusion_damping;
    if (p.attractant_projection) j["proj_a"] = *p.attractant_projection;
    if (p.repellent_projection) j["proj_r"] = *p.repellent_projection;
    if (p.illumination) {
        j["L_w"] = p.illumination->window;
        j["L_d"] = p.illumination->damping;
    }
    if (p.growth) {
        j["G_f"] = p.growth->frequency;
        j["G_w"] = p.growth->window;
        j["G_min"] = p.growth->min_count;
        j["G_max"] = p.growth->max_count;
    }
    if (p.shrink) {
        j["S_f"] = p.shrink->frequency;
        j["S_w"] = p.shrink->window;
        j["S_min"] = p.shrink->min_count;
        j["S_max"] = p.shrink->max_count;
    }
    return j;
}

inline ModelParams params_from_json(const json& j) {
    detail::check_keys(j, "params",
                       {"p", "SA", "RA", "SO", "SO_min", "SO_max", "Dep_t", "D_w", "D_d",
                        "proj_a", "proj_r", "L_w", "L_d", "G_f", "G_w", "G_min", "G_max",
                        "S_f", "S_w", "S_min", "S_max"});
    ModelParams p;
    p.population = j.at("p").get<long>();
    p.sensor_angle = j.at("SA").get<double>();
    p.rotation_angle = j.at("RA").get<double>();
    if (j.contains("SO")) {
        if (j.contains("SO_min") || j.contains("SO_max"))
            throw ConfigError("give either SO or SO_min/SO_max, not both");
        p.so_min = p.so_max = j.at("SO").get<int>();
    } else if (j.contains("SO_min") || j.contains("SO_max")) {
        p.so_min = j.at("SO_min").get<int>();
        p.so_max = j.at("SO_max").get<int>();
    } else {
        throw ConfigError("params need SO or SO_min/SO_max");
    }
    p.deposit = j.at("Dep_t").get<double>();
    p.diffusion_window = j.at("D_w").get<int>();
    p.diffusion_damping = j.at("D_d").get<double>();
    if (j.contains("proj_a")) p.attractant_projection = j.at("proj_a").get<double>();
    if (j.contains("proj_r")) p.repellent_projection = j.at("proj_r").get<double>();
    if (j.contains("L_w") != j.contains("L_d"))
        throw ConfigError("L_w and L_d must be given together");
    if (j.contains("L_w"))
        p.illumination = IlluminationParams{j.at("L_w").get<int>(), j.at("L_d").get<double>(),
                                            false};
    const bool has_g = j.contains("G_f");
    if (has_g != j.contains("G_w") || has_g != j.contains("G_min") ||
        has_g != j.contains("G_max"))
        throw ConfigError("G_f, G_w, G_min, G_max must be given together");
    if (has_g)
        p.growth = PopulationTest{j.at("G_f").get<int>(), j.at("G_w").get<int>(),
                                  j.at("G_min").get<int>(), j.at("G_max").get<int>()};
    const bool has_s = j.contains("S_f");
    if (has_s != j.contains("S_w") || has_s != j.contains("S_min") ||
        has_s != j.contains("S_max"))
        throw ConfigError("S_f, S_w, S_min, S_max must be given together");
    if (has_s)
        p.shrink = PopulationTest{j.at("S_f").get<int>(), j.at("S_w").get<int>(),
                                  j.at("S_min").get<int>(), j.at("S_max").get<int>()};
    return p;
}

inline json scenario_to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["lattice"] = {{"width", s.width}, {"height", s.height}};
    j["params"] = params_to_json(s.params);
    j["growth_enabled"] = s.growth_enabled;
    j["shrink_enabled"] = s.shrink_enabled;
    j["illumination_enabled"] = s.illumination_enabled;

    json nodes;
    if (!s.nodes.pointset.empty()) {
        nodes["pointset"] = s.nodes.pointset;
    } else {
        json pts = json::array();
        for (const Vec2& p : s.nodes.points) pts.push_back(detail::vec2_json(p));
        nodes["points"] = pts;
    }
    nodes["polarity"] =
        s.nodes.polarity == Polarity::attractant ? "attractant" : "repellent";
    nodes["activation"] = s.nodes.activation == Activation::always ? "always" : "on-touch";
    nodes["contact"] = s.nodes.contact == ContactBehaviour::none ? "none"
                                                                 : "annihilate-respawn";
    nodes["contact_radius"] = s.nodes.contact_radius;
    if (s.nodes.boundary_spacing > 0.0) {
        nodes["boundary_repellents"] = {{"spacing", s.nodes.boundary_spacing},
                                        {"inset", s.nodes.boundary_inset}};
    }
    j["nodes"] = nodes;

    json illum;
    if (s.illumination.kind == IlluminationLayout::Kind::none) {
        illum["kind"] = "none";
    } else {
        illum["kind"] = "protect-strokes";
        if (!s.illumination.pointset.empty()) illum["pointset"] = s.illumination.pointset;
        illum["margin"] = s.illumination.margin;
        if (s.illumination.literal_damping) illum["literal_damping"] = true;
    }
    j["illumination"] = illum;

    json inoc;
    inoc["kind"] = s.inoculation.kind;
    if (s.inoculation.kind == "single-site") {
        if (s.inoculation.site) {
            inoc["site"] = detail::vec2_json(*s.inoculation.site);
        } else {
            inoc["site_index"] = s.inoculation.site_index;
        }
        inoc["radius"] = s.inoculation.radius;
    } else if (s.inoculation.kind == "ring") {
        if (s.inoculation.ring_centre)
            inoc["centre"] = detail::vec2_json(*s.inoculation.ring_centre);
        if (s.inoculation.ring_radius) inoc["radius"] = *s.inoculation.ring_radius;
        inoc["margin"] = s.inoculation.ring_margin;
        inoc["thickness"] = s.inoculation.thickness;
    } else if (s.inoculation.kind == "at-nodes") {
        inoc["radius"] = s.inoculation.radius;
    } else if (s.inoculation.kind == "solid-region") {
        if (s.inoculation.region) {
            json pts = json::array();
            for (const Vec2& p : s.inoculation.region->vertices)
                pts.push_back(detail::vec2_json(p));
            inoc["region"] = pts;
        }
    } else if (s.inoculation.kind == "on-edges") {
        if (s.inoculation.edges) {
            json segs = json::array();
            for (const Segment& e : *s.inoculation.edges)
                segs.push_back(json::array({e.a.x, e.a.y, e.b.x, e.b.y}));
            inoc["edges"] = segs;
        }
        inoc["thickness"] = s.inoculation.thickness;
    }
    j["inoculation"] = inoc;

    j["steps"] = s.step_budget;
    j["stop_on_stable"] = s.stop_on_stable;
    if (!s.gmax_schedule.empty()) {
        json sched = json::array();
        for (const GmaxChange& c : s.gmax_schedule)
            sched.push_back({{"at_step", c.at_step}, {"G_max", c.value}});
        j["gmax_schedule"] = sched;
    }
    if (!s.gmax_sweep.empty()) {
        j["gmax_sweep"] = s.gmax_sweep;
        if (!s.sweep_step_budgets.empty()) {
            json budgets;
            for (const auto& [gmax, steps] : s.sweep_step_budgets)
                budgets[std::to_string(gmax)] = steps;
            j["sweep_step_budgets"] = budgets;
        }
    }

    j["outputs"] = {{"frames_every", s.outputs.frames_every},
                    {"population_csv", s.outputs.population_csv},
                    {"hull_json", s.outputs.hull_json},
                    {"metrics_json", s.outputs.metrics_json},
                    {"display_gain", s.outputs.display_gain}};
    return j;
}

inline Scenario scenario_from_json(const json& j) {
    detail::check_keys(j, "scenario",
                       {"name", "lattice", "params", "growth_enabled", "shrink_enabled",
                        "illumination_enabled", "nodes", "illumination", "inoculation",
                        "steps", "stop_on_stable", "gmax_schedule", "gmax_sweep",
                        "sweep_step_budgets", "outputs"});
    Scenario s;
    s.name = j.at("name").get<std::string>();
    const json& lattice = j.at("lattice");
    detail::check_keys(lattice, "lattice", {"width", "height"});
    s.width = lattice.at("width").get<int>();
    s.height = lattice.at("height").get<int>();
    s.params = params_from_json(j.at("params"));
    s.growth_enabled = j.value("growth_enabled", false);
    s.shrink_enabled = j.value("shrink_enabled", false);
    s.illumination_enabled = j.value("illumination_enabled", false);

    if (j.contains("nodes")) {
        const json& nodes = j.at("nodes");
        detail::check_keys(nodes, "nodes",
                           {"pointset", "points", "polarity", "activation", "contact",
                            "contact_radius", "boundary_repellents"});
        if (nodes.contains("pointset") && nodes.contains("points"))
            throw ConfigError("nodes: give either pointset or points, not both");
        if (nodes.contains("pointset"))
            s.nodes.pointset = nodes.at("pointset").get<std::string>();
        if (nodes.contains("points"))
            s.nodes.points = detail::points_from(nodes.at("points"), "nodes.points");
        const std::string polarity = nodes.value("polarity", "attractant");
        if (polarity == "attractant") {
            s.nodes.polarity = Polarity::attractant;
        } else if (polarity == "repellent") {
            s.nodes.polarity = Polarity::repellent;
        } else {
            throw ConfigError("nodes.polarity must be attractant or repellent");
        }
        const std::string activation = nodes.value("activation", "always");
        if (activation == "always") {
            s.nodes.activation = Activation::always;
        } else if (activation == "on-touch") {
            s.nodes.activation = Activation::on_touch;
        } else {
            throw ConfigError("nodes.activation must be always or on-touch");
        }
        const std::string contact = nodes.value("contact", "none");
        if (contact == "none") {
            s.nodes.contact = ContactBehaviour::none;
        } else if (contact == "annihilate-respawn") {
            s.nodes.contact = ContactBehaviour::annihilate_respawn;
        } else {
            throw ConfigError("nodes.contact must be none or annihilate-respawn");
        }
        s.nodes.contact_radius = nodes.value("contact_radius", 3.0);
        if (nodes.contains("boundary_repellents")) {
            const json& rim = nodes.at("boundary_repellents");
            detail::check_keys(rim, "nodes.boundary_repellents", {"spacing", "inset"});
            s.nodes.boundary_spacing = rim.at("spacing").get<double>();
            s.nodes.boundary_inset = rim.value("inset", 1.0);
            if (s.nodes.boundary_spacing <= 0.0)
                throw ConfigError("boundary_repellents.spacing must be positive");
        }
    }

    if (j.contains("illumination")) {
        const json& illum = j.at("illumination");
        detail::check_keys(illum, "illumination",
                           {"kind", "pointset", "margin", "literal_damping"});
        const std::string kind = illum.value("kind", "none");
        if (kind == "none") {
            s.illumination.kind = IlluminationLayout::Kind::none;
        } else if (kind == "protect-strokes") {
            s.illumination.kind = IlluminationLayout::Kind::protect_strokes;
        } else {
            throw ConfigError("illumination.kind must be none or protect-strokes");
        }
        if (illum.contains("pointset"))
            s.illumination.pointset = illum.at("pointset").get<std::string>();
        s.illumination.margin = illum.value("margin", 8.0);
        s.illumination.literal_damping = illum.value("literal_damping", false);
    }

    if (j.contains("inoculation")) {
        const json& inoc = j.at("inoculation");
        detail::check_keys(inoc, "inoculation",
                           {"kind", "site", "site_index", "radius", "centre", "margin",
                            "thickness", "region", "edges"});
        s.inoculation.kind = inoc.value("kind", "random-everywhere");
        if (inoc.contains("site"))
            s.inoculation.site = detail::vec2_from(inoc.at("site"), "inoculation.site");
        s.inoculation.site_index = inoc.value("site_index", 0);
        if (s.inoculation.kind == "ring") {
            if (inoc.contains("centre"))
                s.inoculation.ring_centre =
                    detail::vec2_from(inoc.at("centre"), "inoculation.centre");
            if (inoc.contains("radius"))
                s.inoculation.ring_radius = inoc.at("radius").get<double>();
            s.inoculation.ring_margin = inoc.value("margin", 15.0);
        } else if (inoc.contains("radius")) {
            s.inoculation.radius = inoc.at("radius").get<double>();
        }
        s.inoculation.thickness = inoc.value("thickness", 5.0);
        if (inoc.contains("region"))
            s.inoculation.region =
                Polygon{detail::points_from(inoc.at("region"), "inoculation.region")};
        if (inoc.contains("edges")) {
            std::vector<Segment> segs;
            for (const json& e : inoc.at("edges")) {
                if (!e.is_array() || e.size() != 4)
                    throw ConfigError("inoculation.edges entries must be [x1,y1,x2,y2]");
                segs.push_back({{e[0].get<double>(), e[1].get<double>()},
                                {e[2].get<double>(), e[3].get<double>()}});
            }
            s.inoculation.edges = std::move(segs);
        }
    }

    s.step_budget = j.value("steps", 10000L);
    s.stop_on_stable = j.value("stop_on_stable", true);
    if (j.contains("gmax_schedule")) {
        for (const json& c : j.at("gmax_schedule")) {
            detail::check_keys(c, "gmax_schedule entry", {"at_step", "G_max"});
            s.gmax_schedule.push_back(
                {c.at("at_step").get<long>(), c.at("G_max").get<int>()});
        }
    }
    if (j.contains("gmax_sweep"))
        s.gmax_sweep = j.at("gmax_sweep").get<std::vector<int>>();
    if (j.contains("sweep_step_budgets")) {
        for (const auto& [key, value] : j.at("sweep_step_budgets").items())
            s.sweep_step_budgets[std::stoi(key)] = value.get<long>();
    }

    if (j.contains("outputs")) {
        const json& out = j.at("outputs");
        detail::check_keys(out, "outputs",
                           {"frames_every", "population_csv", "hull_json", "metrics_json",
                            "display_gain"});
        s.outputs.frames_every = out.value("frames_every", 0L);
        s.outputs.population_csv = out.value("population_csv", true);
        s.outputs.hull_json = out.value("hull_json", true);
        s.outputs.metrics_json = out.value("metrics_json", true);
        s.outputs.display_gain = out.value("display_gain", 10.0);
    }

    validate_scenario(s);
    return s;
}

// Parses scenario text; JSON syntax errors keep the parser's position report.
inline Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return scenario_from_json(j);
}

// Applies one `key=value` parameter override (parameter-table keys only).
inline void apply_override(Scenario& s, const std::string& key, const std::string& value) {
    json params = params_to_json(s.params);
    const auto as_number = [&]() -> json {
        try {
            return json::parse(value);
        } catch (const json::parse_error&) {
            throw ConfigError("override " + key + ": cannot parse value \"" + value + "\"");
        }
    };
    static const char* known[] = {"p",      "SA",    "RA",    "SO",    "SO_min", "SO_max",
                                  "Dep_t",  "D_w",   "D_d",   "proj_a", "proj_r", "L_w",
                                  "L_d",    "G_f",   "G_w",   "G_min", "G_max",  "S_f",
                                  "S_w",    "S_min", "S_max"};
    bool ok = false;
    for (const char* k : known)
        if (key == k) {
            ok = true;
            break;
        }
    if (!ok) throw ConfigError("override names unknown parameter key: " + key);

    const bool grouped_g = key.rfind("G_", 0) == 0 && !params.contains("G_f");
    const bool grouped_s = key.rfind("S_", 0) == 0 && key != "SA" &&
                           key != "SO" && key != "SO_min" && key != "SO_max" &&
                           !params.contains("S_f");
    const bool grouped_l = (key == "L_w" || key == "L_d") && !params.contains("L_w");
    if (grouped_g || grouped_s || grouped_l)
        throw ConfigError("override " + key + ": mechanism is disabled for this scenario");
    if (key == "SO") {
        params.erase("SO_min");
        params.erase("SO_max");
    }
    if ((key == "SO_min" || key == "SO_max") && params.contains("SO")) {
        params["SO_min"] = params["SO"];
        params["SO_max"] = params["SO"];
        params.erase("SO");
    }
    params[key] = as_number();
    s.params = params_from_json(params);
    s.params.validate();
}

}  // namespace physarum
