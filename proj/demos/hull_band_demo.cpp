// Shrinks a ring of virtual plasmodium onto a point scatter and prints the
// emergent hull next to the classical one.

#include <iostream>

#include "physarum/presets.hpp"
#include "physarum/runner.hpp"

int main() {
    using namespace physarum;
    Scenario scenario = preset("hull-band-attract");
    scenario.step_budget = 4000;

    const RunResult result = run_scenario(scenario, /*seed=*/7);
    std::cout << "steps: " << result.steps_executed
              << ", population: " << result.population.back() << "\n";

    if (result.cloud_hull && result.node_hull) {
        std::cout << "emergent hull vertices: " << result.cloud_hull->vertices.size()
                  << ", oracle hull vertices: " << result.node_hull->vertices.size() << "\n";
        std::cout << "hausdorff(emergent, oracle) = "
                  << hausdorff(result.cloud_hull->vertices, result.node_hull->vertices)
                  << " cells\n";
    }
    int touched = 0;
    for (const bool active : result.node_active) touched += active;
    std::cout << "nodes touched: " << touched << "/" << result.node_active.size() << "\n";
    return 0;
}
