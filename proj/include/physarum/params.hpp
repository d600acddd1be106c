#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "physarum/error.hpp"

namespace physarum {

// Periodic population test. Counts are neighbours inside the window, the
// tested particle itself excluded, and a test passes only strictly between
// the bounds: with min = 0 an isolated particle fails the test, and with
// max = window^2 - 1 a fully packed window fails it.
struct PopulationTest {
    int frequency = 1;   // G_f / S_f, steps between tests
    int window = 9;      // G_w / S_w, odd >= 3
    int min_count = 0;   // G_min / S_min
    int max_count = 0;   // G_max / S_max

    bool operator==(const PopulationTest&) const = default;
};

struct IlluminationParams {
    int window = 3;        // L_w, odd >= 1
    double damping = 0.9;  // L_d in [0, 1]
    // Damp by L_d itself instead of (1 - L_d); off by default.
    bool literal_factor = false;

    bool operator==(const IlluminationParams&) const = default;
};

// The full per-experiment parameter record. Absent optionals mean the
// corresponding mechanism is not parameterised for the run.
struct ModelParams {
    long population = 0;          // p
    double sensor_angle = 45.0;   // SA, degrees
    double rotation_angle = 45.0; // RA, degrees
    int so_min = 5;               // SO lower bound (fixed SO when equal)
    int so_max = 5;               // SO upper bound
    double deposit = 5.0;         // Dep_t
    int diffusion_window = 3;     // D_w
    double diffusion_damping = 0.1;  // D_d
    std::optional<double> attractant_projection;  // proj_a
    std::optional<double> repellent_projection;   // proj_r
    std::optional<IlluminationParams> illumination;
    std::optional<PopulationTest> growth;   // G_f, G_w, G_min, G_max
    std::optional<PopulationTest> shrink;   // S_f, S_w, S_min, S_max

    bool operator==(const ModelParams&) const = default;

    void validate() const {
        if (population < 0) throw ConfigError("p must be non-negative");
        if (!(sensor_angle > 0.0 && sensor_angle <= 180.0))
            throw ConfigError("SA must lie in (0, 180]");
        if (!(rotation_angle > 0.0 && rotation_angle <= 180.0))
            throw ConfigError("RA must lie in (0, 180]");
        if (so_min < 1) throw ConfigError("SO must be >= 1");
        if (so_min > so_max) throw ConfigError("SO_min must not exceed SO_max");
        if (!std::isfinite(deposit)) throw ConfigError("Dep_t must be finite");
        if (diffusion_window < 3 || diffusion_window % 2 == 0)
            throw ConfigError("D_w must be an odd integer >= 3");
        if (!(diffusion_damping >= 0.0 && diffusion_damping <= 1.0))
            throw ConfigError("D_d must lie in [0, 1]");
        if (attractant_projection && !(*attractant_projection > 0.0))
            throw ConfigError("proj_a must be positive");
        if (repellent_projection && !(*repellent_projection < 0.0))
            throw ConfigError("proj_r must be negative");
        if (illumination) {
            if (illumination->window < 1 || illumination->window % 2 == 0)
                throw ConfigError("L_w must be an odd integer >= 1");
            if (!(illumination->damping >= 0.0 && illumination->damping <= 1.0))
                throw ConfigError("L_d must lie in [0, 1]");
        }
        validate_test("G", growth);
        validate_test("S", shrink);
    }

private:
    static void validate_test(const std::string& prefix,
                              const std::optional<PopulationTest>& t) {
        if (!t) return;
        if (t->frequency < 1) throw ConfigError(prefix + "_f must be >= 1");
        if (t->window < 3 || t->window % 2 == 0)
            throw ConfigError(prefix + "_w must be an odd integer >= 3");
        if (t->min_count < 0) throw ConfigError(prefix + "_min must be non-negative");
        if (t->min_count > t->max_count)
            throw ConfigError(prefix + "_min must not exceed " + prefix + "_max");
    }
};

}  // namespace physarum
