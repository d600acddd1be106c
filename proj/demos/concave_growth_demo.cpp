// Grows a blob from the MST of the square test points and reports how the
// growth ceiling shapes the final footprint.

#include <iostream>

#include "physarum/presets.hpp"
#include "physarum/runner.hpp"

int main() {
    using namespace physarum;
    const Scenario base = preset("square-mst");

    for (const int gmax : {5, 25}) {
        Scenario s = base;
        s.params.growth->max_count = gmax;
        s.step_budget = 2500;
        const RunResult result = run_scenario(s, /*seed=*/3);
        std::cout << "G_max=" << gmax << ": population " << result.population.front()
                  << " -> " << result.population.back();
        if (result.metrics) std::cout << ", concavity " << result.metrics->concavity;
        std::cout << "\n";
    }
    return 0;
}
