#pragma once

#include <string_view>
#include <vector>

#include "physarum/scenario.hpp"

namespace physarum {

// The ten built-in experiments. Every numeric field follows the published
// parameter table for the corresponding run; layout geometry (node shapes,
// mask margins, inoculation dimensions) is fixed here.
inline std::vector<Scenario> preset_catalogue() {
    std::vector<Scenario> presets;

    // Letter-'H' confinement, with simulated light irradiation outside the
    // letter. Small population seeded at one stimulus site, growth on.
    {
        Scenario s;
        s.name = "h-mask";
        s.width = s.height = 200;
        s.params.population = 10;
        s.params.sensor_angle = 22.5;
        s.params.rotation_angle = 45;
        s.params.so_min = s.params.so_max = 5;
        s.params.deposit = 5;
        s.params.diffusion_window = 5;
        s.params.diffusion_damping = 0.1;
        s.params.attractant_projection = 12.75;
        s.params.illumination = IlluminationParams{3, 0.9, false};
        s.params.growth = PopulationTest{3, 9, 0, 15};
        s.params.shrink = PopulationTest{3, 5, 0, 24};
        s.growth_enabled = s.shrink_enabled = true;
        s.illumination_enabled = true;
        s.nodes.pointset = "letter-H";
        s.illumination.kind = IlluminationLayout::Kind::protect_strokes;
        s.illumination.pointset = "letter-H";
        s.illumination.margin = 12.0;
        s.inoculation.kind = "single-site";
        s.inoculation.site_index = 0;
        s.inoculation.radius = 3.0;
        s.step_budget = 10000;
        s.stop_on_stable = false;
        presets.push_back(s);
    }

    // Control run: same stimuli, no illumination mask.
    {
        Scenario s = presets.back();
        s.name = "h-nomask";
        s.illumination_enabled = false;
        s.illumination = IlluminationLayout{};
        presets.push_back(s);
    }

    // Convex hull by a shrinking band around on-touch attractants.
    {
        Scenario s;
        s.name = "hull-band-attract";
        s.width = s.height = 200;
        s.params.population = 800;
        s.params.sensor_angle = 45;
        s.params.rotation_angle = 45;
        s.params.so_min = s.params.so_max = 5;
        s.params.deposit = 15;
        s.params.diffusion_window = 3;
        s.params.diffusion_damping = 0.1;
        s.params.attractant_projection = 127;
        s.nodes.pointset = "scatter-12";
        s.nodes.activation = Activation::on_touch;
        s.inoculation.kind = "ring";
        s.inoculation.ring_margin = 10.0;
        s.inoculation.thickness = 5.0;
        s.step_budget = 10000;
        s.stop_on_stable = true;
        presets.push_back(s);
    }

    // Convex hull by a band shrinking around repellents; the band envelopes
    // the nodes without touching them.
    {
        Scenario s;
        s.name = "hull-band-repel";
        s.width = s.height = 200;
        s.params.population = 1000;
        s.params.sensor_angle = 60;
        s.params.rotation_angle = 60;
        s.params.so_min = s.params.so_max = 5;
        s.params.deposit = 15;
        s.params.diffusion_window = 3;
        s.params.diffusion_damping = 0.1;
        s.params.repellent_projection = -127;
        s.nodes.pointset = "scatter-12";
        s.nodes.polarity = Polarity::repellent;
        s.inoculation.kind = "ring";
        s.inoculation.ring_margin = 10.0;
        s.inoculation.thickness = 5.0;
        s.step_budget = 10000;
        s.stop_on_stable = true;
        presets.push_back(s);
    }

    // Convex hull by self-organisation: population scattered everywhere,
    // repelled by the nodes; touching a node annihilates the particle and
    // respawns it at a random empty cell.
    {
        Scenario s;
        s.name = "hull-self-organise";
        s.width = s.height = 200;
        s.params.population = 3000;
        s.params.sensor_angle = 45;
        s.params.rotation_angle = 45;
        s.params.so_min = s.params.so_max = 9;
        s.params.deposit = 0.01;
        s.params.diffusion_window = 3;
        s.params.diffusion_damping = 0.07;
        s.params.repellent_projection = -127;
        s.nodes.pointset = "scatter-12";
        s.nodes.polarity = Polarity::repellent;
        s.nodes.contact = ContactBehaviour::annihilate_respawn;
        s.nodes.boundary_spacing = 10.0;  // repellent-lined arena rim
        s.inoculation.kind = "random-everywhere";
        s.step_budget = 20000;
        s.stop_on_stable = false;
        presets.push_back(s);
    }

    // Concave hull by shrinkage: a solid mass filling the convex hull of the
    // letter-'C' nodes, parameters biased toward slow shrinkage.
    {
        Scenario s;
        s.name = "concave-shrink";
        s.width = s.height = 300;
        s.params.population = 18000;
        s.params.sensor_angle = 60;
        s.params.rotation_angle = 60;
        s.params.so_min = s.params.so_max = 7;
        s.params.deposit = 5;
        s.params.diffusion_window = 3;
        s.params.diffusion_damping = 0.05;
        s.params.attractant_projection = 2.55;
        s.params.growth = PopulationTest{3, 9, 0, 20};
        s.params.shrink = PopulationTest{50, 9, 0, 80};
        s.growth_enabled = s.shrink_enabled = true;
        s.nodes.pointset = "letter-C";
        s.inoculation.kind = "solid-region";
        s.step_budget = 30000;
        s.stop_on_stable = true;
        presets.push_back(s);
    }

    // Alpha-shape / concave hull by growth from separate inoculation sites
    // (letter 'A'; fragments fuse and keep the enclosed vacancy).
    {
        Scenario s;
        s.name = "alpha-growth";
        s.width = s.height = 200;
        s.params.population = 1000;
        s.params.sensor_angle = 60;
        s.params.rotation_angle = 60;
        s.params.so_min = s.params.so_max = 13;
        s.params.deposit = 5;
        s.params.diffusion_window = 3;
        s.params.diffusion_damping = 0.1;
        s.params.attractant_projection = 2.55;
        s.params.growth = PopulationTest{5, 9, 0, 30};
        s.params.shrink = PopulationTest{50, 9, 0, 80};
        s.growth_enabled = s.shrink_enabled = true;
        s.nodes.pointset = "letter-A";
        s.inoculation.kind = "at-nodes";
        s.inoculation.radius = 4.0;  // 3-cell discs cannot hold p = 1000
        s.step_budget = 10000;
        s.stop_on_stable = true;
        presets.push_back(s);
    }

    // Concave hull by growth from the minimum spanning tree of the nodes.
    {
        Scenario s;
        s.name = "concave-mst";
        s.width = s.height = 300;
        s.params.population = 1000;
        s.params.sensor_angle = 90;
        s.params.rotation_angle = 45;
        s.params.so_min = 1;
        s.params.so_max = 19;
        s.params.deposit = 5;
        s.params.diffusion_window = 3;
        s.params.diffusion_damping = 0.05;
        s.params.attractant_projection = 5;
        s.params.growth = PopulationTest{3, 9, 0, 20};
        s.params.shrink = PopulationTest{10, 9, 0, 80};
        s.growth_enabled = s.shrink_enabled = true;
        s.nodes.pointset = "china-cities";
        s.inoculation.kind = "on-edges";
        s.inoculation.thickness = 5.0;
        s.step_budget = 10000;
        s.stop_on_stable = true;
        presets.push_back(s);
    }

    // Square test structure grown from its MST.
    {
        Scenario s = presets.back();
        s.name = "square-mst";
        s.width = s.height = 200;
        s.nodes.pointset = "square-4";
        s.step_budget = 5000;
        s.stop_on_stable = false;
        presets.push_back(s);
    }

    // Concavity tuning: square-mst repeated across G_max values; the highest
    // value grows without constraint and gets a shorter budget.
    {
        Scenario s = presets.back();
        s.name = "gmax-sweep";
        s.gmax_sweep = {5, 10, 20, 25, 30};
        s.sweep_step_budgets[30] = 3000;
        presets.push_back(s);
    }

    return presets;
}

inline Scenario preset(std::string_view name) {
    for (Scenario& s : preset_catalogue())
        if (s.name == name) return std::move(s);
    throw ConfigError("unknown preset: " + std::string(name));
}

inline std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const Scenario& s : preset_catalogue()) names.push_back(s.name);
    return names;
}

}  // namespace physarum
