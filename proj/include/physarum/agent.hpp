#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "physarum/error.hpp"
#include "physarum/occupancy.hpp"
#include "physarum/rng.hpp"
#include "physarum/stimulus.hpp"

namespace physarum {

inline double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }

inline double normalize_heading(double deg) {
    double h = std::fmod(deg, 360.0);
    if (h < 0.0) h += 360.0;
    if (h >= 360.0) h = 0.0;
    return h;
}

// One agent: continuous position in cell units, y-up frame, heading degrees
// counter-clockwise from the +x axis.
struct Particle {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;  // in [0, 360)
    bool moved_last_step = false;
    std::int32_t id = kInvalidId;

    static constexpr std::int32_t kInvalidId = -1;

    int cell_x() const { return static_cast<int>(std::floor(x)); }
    int cell_y() const { return static_cast<int>(std::floor(y)); }
};

// Sensor geometry: front-left sensor sits at heading + SA, front-right at
// heading - SA. The offset is fixed when min == max, otherwise one value is
// drawn per agent per step and shared by all three sensors.
struct SensorConfig {
    double sensor_angle;    // SA, degrees
    double rotation_angle;  // RA, degrees
    int offset_min;         // SO lower bound, pixels
    int offset_max;         // SO upper bound

    SensorConfig(double sa, double ra, int so_min, int so_max)
        : sensor_angle(sa), rotation_angle(ra), offset_min(so_min), offset_max(so_max) {
        if (!(sa > 0.0 && sa <= 180.0))
            throw ConfigError("SA must lie in (0, 180], got " + std::to_string(sa));
        if (!(ra > 0.0 && ra <= 180.0))
            throw ConfigError("RA must lie in (0, 180], got " + std::to_string(ra));
        if (so_min < 1) throw ConfigError("SO must be >= 1");
        if (so_min > so_max) throw ConfigError("SO range must satisfy min <= max");
    }

    bool ranged() const { return offset_min != offset_max; }

    int draw_offset(Rng& rng) const {
        return ranged() ? rng.range_int(offset_min, offset_max) : offset_min;
    }
};

struct SensorReadings {
    double left = 0.0;   // FL, at heading + SA
    double front = 0.0;  // F, at heading
    double right = 0.0;  // FR, at heading - SA
};

inline SensorReadings sense(const Particle& p, double offset, const SensorConfig& cfg,
                            const TrailField& field, const IlluminationMask& mask) {
    const double h = deg_to_rad(p.heading);
    const double a = deg_to_rad(cfg.sensor_angle);
    const double ch = std::cos(h), sh = std::sin(h);
    const double ca = std::cos(a), sa = std::sin(a);
    // cos/sin of heading +- SA by angle addition.
    const double cl = ch * ca - sh * sa, sl = sh * ca + ch * sa;
    const double cr = ch * ca + sh * sa, sr = sh * ca - ch * sa;
    SensorReadings r;
    r.left = sense_at(field, mask, p.x + offset * cl, p.y + offset * sl);
    r.front = sense_at(field, mask, p.x + offset * ch, p.y + offset * sh);
    r.right = sense_at(field, mask, p.x + offset * cr, p.y + offset * sr);
    return r;
}

// Rotation rule: keep heading while the front reading is at least as strong
// as both flanks; turn randomly when both flanks beat the front; otherwise
// turn toward the stronger flank. Left turns add RA (counter-clockwise).
inline double orient(double heading, const SensorReadings& r, double rotation_angle,
                     Rng& rng) {
    double turn = 0.0;
    if (r.front >= r.left && r.front >= r.right) {
        turn = 0.0;
    } else if (r.left > r.front && r.right > r.front) {
        turn = rng.coin() ? rotation_angle : -rotation_angle;
    } else if (r.left > r.right) {
        turn = rotation_angle;
    } else if (r.right > r.left) {
        turn = -rotation_angle;
    }
    return normalize_heading(heading + turn);
}

struct MoveOutcome {
    bool moved = false;
    int to_x = 0;
    int to_y = 0;
};

// Single-pixel forward step. A candidate cell that is out of bounds or held
// by another particle blocks the move; the mover then picks a fresh uniform
// random heading and deposits nothing. Successful moves (including moves that
// stay within the current cell) deposit `deposit` at the destination cell.
inline MoveOutcome attempt_move(Particle& p, OccupancyGrid& occupancy, TrailField& trail,
                                double deposit, Rng& rng) {
    const double h = deg_to_rad(p.heading);
    const double nx = p.x + std::cos(h);
    const double ny = p.y + std::sin(h);
    const int cell_x = static_cast<int>(std::floor(nx));
    const int cell_y = static_cast<int>(std::floor(ny));
    const int cur_x = p.cell_x();
    const int cur_y = p.cell_y();

    const bool same_cell = (cell_x == cur_x && cell_y == cur_y);
    if (!occupancy.in_bounds(cell_x, cell_y) ||
        (!same_cell && !occupancy.vacant(cell_x, cell_y))) {
        p.heading = rng.angle_deg();
        p.moved_last_step = false;
        return {};
    }

    if (!same_cell) occupancy.relocate(cur_x, cur_y, cell_x, cell_y, p.id);
    p.x = nx;
    p.y = ny;
    trail.at(cell_x, cell_y) += deposit;
    p.moved_last_step = true;
    return {true, cell_x, cell_y};
}

}  // namespace physarum
