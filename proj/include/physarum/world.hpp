#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "physarum/agent.hpp"
#include "physarum/error.hpp"
#include "physarum/field.hpp"
#include "physarum/geom.hpp"
#include "physarum/occupancy.hpp"
#include "physarum/params.hpp"
#include "physarum/rng.hpp"
#include "physarum/stimulus.hpp"

namespace physarum {

// Where the initial population goes. Candidate cells are enumerated in scan
// order and shuffled, so placement is a pure function of (pattern, seed).
struct InoculationPattern {
    enum class Kind {
        single_site,
        ring,
        random_everywhere,
        at_nodes,
        solid_region,
        on_edges,
    };

    Kind kind = Kind::random_everywhere;
    // single_site / at_nodes
    Vec2 site{};
    double radius = 3.0;
    PointSet node_sites{};
    // ring
    Vec2 ring_centre{};
    double ring_radius = 0.0;
    double thickness = 5.0;
    // solid_region
    Polygon region{};
    // on_edges
    std::vector<Segment> edges{};

    static InoculationPattern single_site(Vec2 site, double radius = 3.0) {
        InoculationPattern p;
        p.kind = Kind::single_site;
        p.site = site;
        p.radius = radius;
        return p;
    }
    static InoculationPattern ring(Vec2 centre, double radius, double thickness = 5.0) {
        InoculationPattern p;
        p.kind = Kind::ring;
        p.ring_centre = centre;
        p.ring_radius = radius;
        p.thickness = thickness;
        return p;
    }
    static InoculationPattern random_everywhere() { return {}; }
    static InoculationPattern at_nodes(PointSet sites, double radius = 3.0) {
        InoculationPattern p;
        p.kind = Kind::at_nodes;
        p.node_sites = std::move(sites);
        p.radius = radius;
        return p;
    }
    static InoculationPattern solid_region(Polygon region) {
        InoculationPattern p;
        p.kind = Kind::solid_region;
        p.region = std::move(region);
        return p;
    }
    static InoculationPattern on_edges(std::vector<Segment> edges, double thickness = 5.0) {
        InoculationPattern p;
        p.kind = Kind::on_edges;
        p.edges = std::move(edges);
        p.thickness = thickness;
        return p;
    }

    // All habitable cells of the pattern, scan order (y rows ascending).
    std::vector<std::pair<int, int>> candidate_cells(int width, int height) const {
        std::vector<std::pair<int, int>> cells;
        const auto push_if = [&](int x, int y, bool ok) {
            if (ok) cells.emplace_back(x, y);
        };
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                const Vec2 c{static_cast<double>(x), static_cast<double>(y)};
                switch (kind) {
                    case Kind::single_site:
                        push_if(x, y, distance(c, site) <= radius);
                        break;
                    case Kind::ring:
                        push_if(x, y,
                                std::abs(distance(c, ring_centre) - ring_radius) <=
                                    thickness * 0.5);
                        break;
                    case Kind::random_everywhere:
                        cells.emplace_back(x, y);
                        break;
                    case Kind::at_nodes: {
                        bool near = false;
                        for (const Vec2& s : node_sites)
                            if (distance(c, s) <= radius) {
                                near = true;
                                break;
                            }
                        push_if(x, y, near);
                        break;
                    }
                    case Kind::solid_region:
                        push_if(x, y, polygon_contains(region, c, true));
                        break;
                    case Kind::on_edges: {
                        bool near = false;
                        for (const Segment& s : edges)
                            if (point_segment_distance(c, s) <= thickness * 0.5) {
                                near = true;
                                break;
                            }
                        push_if(x, y, near);
                        break;
                    }
                }
            }
        }
        return cells;
    }
};

// Full model state: trail lattice, occupancy, stimuli, illumination, particle
// population, parameter record and the run's random stream. One step() call
// executes, in order: stimulus projection, the sensory pass, the motor pass,
// diffusion, then the growth and shrinkage tests when due. Every stochastic
// draw comes from the single seeded stream in that fixed order.
class World {
public:
    World(int width, int height, ModelParams params, std::vector<StimulusNode> nodes,
          IlluminationMask mask, std::uint64_t seed)
        : params_(std::move(params)),
          sensors_(params_.sensor_angle, params_.rotation_angle, params_.so_min,
                   params_.so_max),
          kernel_(params_.diffusion_window, params_.diffusion_damping),
          trail_(width, height, 0.0),
          occupancy_(width, height),
          mask_(std::move(mask)),
          nodes_(std::move(nodes)),
          rng_(seed) {
        params_.validate();
        validate_nodes(nodes_, width, height);
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].needs_contact_checks())
                contact_nodes_.push_back(static_cast<int>(i));
    }

    int width() const { return trail_.width(); }
    int height() const { return trail_.height(); }
    const TrailField& trail() const { return trail_; }
    const OccupancyGrid& occupancy() const { return occupancy_; }
    const std::vector<Particle>& particles() const { return particles_; }
    const std::vector<StimulusNode>& nodes() const { return nodes_; }
    const IlluminationMask& mask() const { return mask_; }
    const ModelParams& params() const { return params_; }
    long step_count() const { return step_count_; }
    long population() const { return static_cast<long>(particles_.size()); }
    Rng& rng() { return rng_; }

    // Mid-run growth ceiling change.
    void set_growth_max(int g_max) {
        if (!params_.growth) throw ConfigError("growth is disabled for this run");
        params_.growth->max_count = g_max;
    }

    // Places params().population particles collision-free inside the pattern,
    // with uniform random headings.
    void inoculate(const InoculationPattern& pattern) {
        PHYSARUM_CHECK(particles_.empty(), "world already inoculated");
        auto cells = pattern.candidate_cells(width(), height());
        if (static_cast<long>(cells.size()) < params_.population)
            throw ConfigError("inoculation pattern holds " + std::to_string(cells.size()) +
                              " cells, fewer than p = " + std::to_string(params_.population));
        rng_.shuffle(cells);
        particles_.reserve(static_cast<std::size_t>(params_.population));
        for (long i = 0; i < params_.population; ++i) {
            const auto [cx, cy] = cells[static_cast<std::size_t>(i)];
            spawn_particle(cx, cy, rng_.angle_deg());
        }
    }

    void step() {
        project_stimuli(trail_, nodes_);
        sensory_pass();
        motor_pass();
        diffuse(trail_, diffusion_out_, diffusion_scratch_, kernel_);
        std::swap(trail_, diffusion_out_);
        if (params_.growth && step_count_ % params_.growth->frequency == 0) growth_pass();
        if (params_.shrink && step_count_ % params_.shrink->frequency == 0) shrink_pass();
        ++step_count_;
    }

    PointSet particle_points() const {
        PointSet ps;
        ps.reserve(particles_.size());
        for (const Particle& p : particles_) ps.push_back({p.x, p.y});
        return ps;
    }

    Grid<std::uint8_t> blob_mask() const {
        Grid<std::uint8_t> mask(width(), height(), 0);
        for (const Particle& p : particles_) mask.at(p.cell_x(), p.cell_y()) = 1;
        return mask;
    }

    // Test support: verifies the occupancy <-> particle bijection.
    bool occupancy_consistent() const {
        if (occupancy_.occupied_count() != population()) return false;
        for (const Particle& p : particles_)
            if (occupancy_.occupant(p.cell_x(), p.cell_y()) != p.id) return false;
        return true;
    }

private:
    void refill_order(std::vector<std::uint32_t>& order) {
        order.resize(particles_.size());
        std::iota(order.begin(), order.end(), 0u);
        rng_.shuffle(order);
    }

    void sensory_pass() {
        refill_order(order_);
        for (const std::uint32_t idx : order_) {
            Particle& p = particles_[idx];
            const int offset = sensors_.draw_offset(rng_);
            const SensorReadings r = sense(p, offset, sensors_, trail_, mask_);
            p.heading = orient(p.heading, r, sensors_.rotation_angle, rng_);
        }
    }

    void motor_pass() {
        refill_order(order_);
        for (const std::uint32_t idx : order_) {
            Particle& p = particles_[idx];
            const MoveOutcome outcome =
                attempt_move(p, occupancy_, trail_, params_.deposit, rng_);
            if (outcome.moved && !contact_nodes_.empty())
                fire_contacts(p, outcome.to_x, outcome.to_y);
        }
    }

    void fire_contacts(Particle& p, int cx, int cy) {
        for (const int ni : contact_nodes_) {
            StimulusNode& node = nodes_[static_cast<std::size_t>(ni)];
            const double dx = cx - node.cell_x();
            const double dy = cy - node.cell_y();
            if (dx * dx + dy * dy > node.contact_radius * node.contact_radius) continue;
            if (node.activation == Activation::on_touch) node.active = true;
            if (node.contact == ContactBehaviour::annihilate_respawn) {
                respawn(p);
                return;  // the particle is elsewhere now
            }
        }
    }

    // Deletes the particle from its cell and re-creates it (same id) at a
    // uniformly chosen empty cell with a fresh random heading.
    void respawn(Particle& p) {
        occupancy_.remove(p.cell_x(), p.cell_y(), p.id);
        int x = 0, y = 0;
        for (int attempt = 0;; ++attempt) {
            x = static_cast<int>(rng_.below(static_cast<std::uint64_t>(width())));
            y = static_cast<int>(rng_.below(static_cast<std::uint64_t>(height())));
            if (occupancy_.vacant(x, y)) break;
            if (attempt == 4096) {  // near-full lattice: scan from the last draw
                while (!occupancy_.vacant(x, y)) {
                    if (++x == width()) {
                        x = 0;
                        y = (y + 1) % height();
                    }
                }
                break;
            }
        }
        occupancy_.insert(x, y, p.id);
        p.x = x + 0.5;
        p.y = y + 0.5;
        p.heading = rng_.angle_deg();
        p.moved_last_step = false;
    }

    // Growth: a particle with strictly more than G_min and strictly fewer
    // than G_max neighbours in its window (itself not counted) that moved
    // this step spawns one particle into a uniformly chosen empty cell of
    // its 3x3 neighbourhood. Isolated particles sit on the G_min = 0 bound
    // and are sterile. Spawns claim occupancy immediately but join the
    // population after the pass, so they are not themselves tested.
    void growth_pass() {
        const PopulationTest t = *params_.growth;
        const int half = t.window / 2;
        refill_order(order_);
        pending_spawns_.clear();
        for (const std::uint32_t idx : order_) {
            const Particle& p = particles_[idx];
            if (!p.moved_last_step) continue;
            const int neighbours =
                occupancy_.window_count(p.cell_x(), p.cell_y(), half) - 1;
            if (neighbours <= t.min_count || neighbours >= t.max_count) continue;
            int empties[8];
            int n_empty = 0;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int nx = p.cell_x() + dx, ny = p.cell_y() + dy;
                    if (occupancy_.vacant(nx, ny)) empties[n_empty++] = (dy + 1) * 3 + (dx + 1);
                }
            }
            if (n_empty == 0) continue;
            const int slot = empties[rng_.below(static_cast<std::uint64_t>(n_empty))];
            const int sx = p.cell_x() + (slot % 3) - 1;
            const int sy = p.cell_y() + (slot / 3) - 1;
            Particle child;
            child.id = next_id_++;
            child.x = sx + 0.5;
            child.y = sy + 0.5;
            child.heading = rng_.angle_deg();
            child.moved_last_step = false;
            occupancy_.insert(sx, sy, child.id);
            pending_spawns_.push_back(child);
        }
        particles_.insert(particles_.end(), pending_spawns_.begin(), pending_spawns_.end());
    }

    // Shrinkage: a particle survives while its neighbour count (self
    // excluded) stays strictly between S_min and S_max; isolated particles
    // and fully packed windows are culled. Counts are read live, so each
    // deletion relaxes the neighbourhood of particles tested later in the
    // pass.
    void shrink_pass() {
        const PopulationTest t = *params_.shrink;
        const int half = t.window / 2;
        refill_order(order_);
        bool any_deleted = false;
        for (const std::uint32_t idx : order_) {
            Particle& p = particles_[idx];
            const int neighbours =
                occupancy_.window_count(p.cell_x(), p.cell_y(), half) - 1;
            if (neighbours > t.min_count && neighbours < t.max_count) continue;
            occupancy_.remove(p.cell_x(), p.cell_y(), p.id);
            p.id = Particle::kInvalidId;
            any_deleted = true;
        }
        if (any_deleted) {
            std::erase_if(particles_,
                          [](const Particle& p) { return p.id == Particle::kInvalidId; });
        }
    }

    void spawn_particle(int cx, int cy, double heading) {
        Particle p;
        p.id = next_id_++;
        p.x = cx + 0.5;
        p.y = cy + 0.5;
        p.heading = heading;
        p.moved_last_step = false;
        occupancy_.insert(cx, cy, p.id);
        particles_.push_back(p);
    }

    ModelParams params_;
    SensorConfig sensors_;
    DiffusionKernel kernel_;
    TrailField trail_;
    TrailField diffusion_out_;
    TrailField diffusion_scratch_;
    OccupancyGrid occupancy_;
    IlluminationMask mask_;
    std::vector<StimulusNode> nodes_;
    std::vector<int> contact_nodes_;
    std::vector<Particle> particles_;
    std::vector<Particle> pending_spawns_;
    std::vector<std::uint32_t> order_;
    Rng rng_;
    long step_count_ = 0;
    std::int32_t next_id_ = 0;
};

}  // namespace physarum
