#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "physarum/error.hpp"
#include "physarum/field.hpp"
#include "physarum/grid.hpp"

namespace physarum {

enum class Polarity { attractant, repellent };
enum class Activation { always, on_touch };
enum class ContactBehaviour { none, annihilate_respawn };

// A point stimulus projecting into the trail lattice once per scheduler step.
// Attractants project a positive value, repellents a negative one. An
// on-touch node stays silent until a particle first moves within its contact
// radius, then projects forever.
struct StimulusNode {
    double x = 0.0;
    double y = 0.0;
    Polarity polarity = Polarity::attractant;
    double projection = 0.0;
    Activation activation = Activation::always;
    ContactBehaviour contact = ContactBehaviour::none;
    double contact_radius = 3.0;
    bool active = true;

    int cell_x() const { return static_cast<int>(std::floor(x)); }
    int cell_y() const { return static_cast<int>(std::floor(y)); }

    bool needs_contact_checks() const {
        return activation == Activation::on_touch ||
               contact == ContactBehaviour::annihilate_respawn;
    }
};

inline StimulusNode make_attractant(double x, double y, double proj_a,
                                    Activation activation = Activation::always) {
    StimulusNode n;
    n.x = x;
    n.y = y;
    n.polarity = Polarity::attractant;
    n.projection = proj_a;
    n.activation = activation;
    n.active = (activation == Activation::always);
    return n;
}

inline StimulusNode make_repellent(double x, double y, double proj_r,
                                   ContactBehaviour contact = ContactBehaviour::none) {
    StimulusNode n;
    n.x = x;
    n.y = y;
    n.polarity = Polarity::repellent;
    n.projection = proj_r;
    n.contact = contact;
    return n;
}

inline void validate_nodes(const std::vector<StimulusNode>& nodes, int width, int height) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const StimulusNode& n = nodes[i];
        const std::string where = "stimulus node " + std::to_string(i);
        if (n.cell_x() < 0 || n.cell_x() >= width || n.cell_y() < 0 || n.cell_y() >= height)
            throw ConfigError(where + " lies outside the lattice");
        if (n.polarity == Polarity::attractant && !(n.projection > 0.0))
            throw ConfigError(where + ": attractant projection must be positive");
        if (n.polarity == Polarity::repellent && !(n.projection < 0.0))
            throw ConfigError(where + ": repellent projection must be negative");
        if (n.contact_radius < 0.0)
            throw ConfigError(where + ": contact radius must be non-negative");
    }
}

// Adds each active node's projection value to the trail at the node's cell.
inline void project_stimuli(TrailField& field, const std::vector<StimulusNode>& nodes) {
    for (const StimulusNode& n : nodes)
        if (n.active) field.at(n.cell_x(), n.cell_y()) += n.projection;
}

// Simulated light irradiation: sensing near lit cells is damped. A sample at
// cell (x, y) is damped when any lit cell falls inside the window x window
// box around it; the halo raster caches that dilation.
class IlluminationMask {
public:
    IlluminationMask() = default;

    IlluminationMask(Grid<std::uint8_t> lit, int window, double damping,
                     bool literal_factor = false)
        : lit_(std::move(lit)), enabled_(true) {
        if (window < 1 || window % 2 == 0)
            throw ConfigError("L_w must be an odd integer >= 1, got " + std::to_string(window));
        if (!(damping >= 0.0 && damping <= 1.0))
            throw ConfigError("L_d must lie in [0, 1], got " + std::to_string(damping));
        factor_ = literal_factor ? damping : 1.0 - damping;
        const int half = window / 2;
        halo_ = Grid<std::uint8_t>(lit_.width(), lit_.height(), 0);
        for (int y = 0; y < lit_.height(); ++y) {
            for (int x = 0; x < lit_.width(); ++x) {
                if (lit_.at(x, y) == 0) continue;
                for (int dy = -half; dy <= half; ++dy)
                    for (int dx = -half; dx <= half; ++dx)
                        if (halo_.in_bounds(x + dx, y + dy)) halo_.at(x + dx, y + dy) = 1;
            }
        }
    }

    bool enabled() const { return enabled_; }
    double factor() const { return factor_; }

    bool damped_at(int x, int y) const {
        return enabled_ && halo_.in_bounds(x, y) && halo_.at(x, y) != 0;
    }

    double apply(double value, int x, int y) const {
        return damped_at(x, y) ? value * factor_ : value;
    }

    const Grid<std::uint8_t>& lit() const { return lit_; }

private:
    Grid<std::uint8_t> lit_;
    Grid<std::uint8_t> halo_;
    double factor_ = 1.0;
    bool enabled_ = false;
};

// Trail value at the cell containing (px, py); 0 outside the lattice, damped
// inside an illumination halo.
inline double sense_at(const TrailField& field, const IlluminationMask& mask, double px,
                       double py) {
    const int cx = static_cast<int>(std::floor(px));
    const int cy = static_cast<int>(std::floor(py));
    if (!field.in_bounds(cx, cy)) return 0.0;
    return mask.apply(field.at(cx, cy), cx, cy);
}

}  // namespace physarum
