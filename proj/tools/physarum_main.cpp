// Command-line front end: run scenarios, list presets, expand parameter
// sweeps and compare run results against the classical geometry oracles.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime/IO error,
// 4 oracle comparison failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "physarum/presets.hpp"
#include "physarum/runner.hpp"

namespace {

using namespace physarum;

// "7" -> {7}; "1..10" -> {1,...,10}; "1,4,9" -> {1,4,9}.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    const auto range_pos = text.find("..");
    if (range_pos != std::string::npos) {
        const std::uint64_t lo = std::stoull(text.substr(0, range_pos));
        const std::uint64_t hi = std::stoull(text.substr(range_pos + 2));
        if (hi < lo) throw ConfigError("seed range must be ascending: " + text);
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) seeds.push_back(std::stoull(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (seeds.empty()) throw ConfigError("no seeds given: " + text);
    return seeds;
}

Scenario load_scenario(const std::string& preset_name, const std::string& config_path,
                       const std::vector<std::string>& overrides) {
    if (preset_name.empty() == config_path.empty())
        throw ConfigError("give exactly one of --preset or --config");
    Scenario s = preset_name.empty() ? parse_scenario(read_text_file(config_path))
                                     : preset(preset_name);
    for (const std::string& kv : overrides) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got: " + kv);
        apply_override(s, kv.substr(0, eq), kv.substr(eq + 1));
    }
    validate_scenario(s);
    return s;
}

void print_run_summary(const RunResult& r, const fs::path& dir) {
    std::cout << r.scenario.name << " seed=" << r.seed << ": " << r.steps_executed
              << " steps, population " << r.population.front() << " -> "
              << r.population.back() << (r.stabilized ? " (stabilized)" : "");
    if (r.metrics)
        std::cout << ", area " << r.metrics->area << ", concavity " << r.metrics->concavity;
    if (!dir.empty()) std::cout << "  [" << dir.string() << "]";
    std::cout << "\n";
}

int run_command(const std::string& preset_name, const std::string& config_path,
                const std::vector<std::string>& overrides, const std::string& seeds_text,
                std::optional<long> steps, std::optional<long> frames_every,
                const std::string& out_dir, int jobs) {
    const Scenario scenario = load_scenario(preset_name, config_path, overrides);
    const std::vector<std::uint64_t> seeds = parse_seeds(seeds_text);
    const fs::path out = out_dir.empty() ? fs::path("out") / scenario.name
                                         : fs::path(out_dir);

    if (!scenario.gmax_sweep.empty()) {
        if (steps || frames_every)
            throw ConfigError("--steps/--frames-every do not apply to sweep scenarios");
        const std::vector<SweepRow> rows = run_gmax_sweep(scenario, seeds, out, jobs);
        std::cout << scenario.name << ": " << rows.size() << " runs -> "
                  << (out / "sweep_summary.csv").string() << "\n";
        return 0;
    }

    for (const std::uint64_t seed : seeds) {
        RunOptions options;
        options.steps_override = steps;
        options.frames_every_override = frames_every;
        options.out_dir =
            seeds.size() == 1 ? out : out / ("seed" + std::to_string(seed));
        const RunResult result = run_scenario(scenario, seed, options);
        print_run_summary(result, options.out_dir);
    }
    return 0;
}

int presets_command() {
    for (const Scenario& s : preset_catalogue()) {
        std::cout << s.name << ": " << s.width << "x" << s.height << ", p=" << s.params.population
                  << ", SA=" << s.params.sensor_angle << ", RA=" << s.params.rotation_angle
                  << ", SO=" << s.params.so_min;
        if (s.params.so_max != s.params.so_min) std::cout << "-" << s.params.so_max;
        std::cout << (s.growth_enabled ? ", growth" : "")
                  << (s.shrink_enabled ? ", shrink" : "")
                  << (s.illumination_enabled ? ", illumination" : "");
        if (!s.gmax_sweep.empty()) {
            std::cout << ", G_max sweep {";
            for (std::size_t i = 0; i < s.gmax_sweep.size(); ++i)
                std::cout << (i ? "," : "") << s.gmax_sweep[i];
            std::cout << "}";
        }
        std::cout << ", steps=" << s.step_budget << "\n";
    }
    return 0;
}

int compare_command(const std::string& dir, const std::string& oracle) {
    const CompareReport report = compare(dir, oracle);
    std::cout << report.report.dump(2) << "\n";
    std::cout << (report.pass ? "PASS" : "FAIL") << ": " << oracle << " comparison for "
              << dir << "\n";
    return report.pass ? 0 : 4;
}

int sweep_command(const std::string& preset_name, const std::string& config_path,
                  const std::vector<std::string>& overrides, const std::string& seeds_text,
                  const std::string& out_dir, int jobs) {
    Scenario scenario = load_scenario(preset_name, config_path, overrides);
    if (scenario.gmax_sweep.empty())
        throw ConfigError("scenario " + scenario.name +
                          " defines no sweep; use a sweep preset or add gmax_sweep");
    const fs::path out = out_dir.empty() ? fs::path("out") / scenario.name
                                         : fs::path(out_dir);
    const std::vector<SweepRow> rows =
        run_gmax_sweep(scenario, parse_seeds(seeds_text), out, jobs);
    for (const SweepRow& row : rows)
        std::cout << "G_max=" << row.gmax << " seed=" << row.seed << ": population "
                  << row.final_population << ", concavity " << row.concavity << "\n";
    std::cout << rows.size() << " runs -> " << (out / "sweep_summary.csv").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-agent virtual plasmodium simulator"};
    app.require_subcommand(1);

    std::string preset_name, config_path, seeds_text = "1", out_dir, oracle, result_dir;
    std::vector<std::string> overrides;
    std::optional<long> steps, frames_every;
    int jobs = 0;

    CLI::App* run = app.add_subcommand("run", "run a scenario");
    run->add_option("--preset", preset_name, "built-in scenario name");
    run->add_option("--config", config_path, "scenario JSON file");
    run->add_option("--seed,--seeds", seeds_text, "seed, list (1,2,5) or range (1..10)");
    run->add_option("--steps", steps, "exact step budget (disables early stop)");
    run->add_option("--frames-every", frames_every, "write PGM frames every N steps");
    run->add_option("--out", out_dir, "output directory (default out/<name>)");
    run->add_option("--set", overrides, "override a parameter key, e.g. --set G_max=25");
    run->add_option("--jobs", jobs, "parallel runs for sweep scenarios");

    CLI::App* presets = app.add_subcommand("presets", "list built-in scenarios");

    CLI::App* cmp = app.add_subcommand("compare", "compare a run against an oracle");
    cmp->add_option("dir", result_dir, "result directory")->required();
    cmp->add_option("--oracle", oracle, "convex, mst or alpha")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep");
    sweep->add_option("--preset", preset_name, "built-in scenario name");
    sweep->add_option("--config", config_path, "scenario JSON file");
    sweep->add_option("--seeds", seeds_text, "seed, list or range");
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--set", overrides, "override a parameter key");
    sweep->add_option("--jobs", jobs, "parallel runs");

    try {
        app.parse(argc, argv);
        if (run->parsed())
            return run_command(preset_name, config_path, overrides, seeds_text, steps,
                               frames_every, out_dir, jobs);
        if (presets->parsed()) return presets_command();
        if (cmp->parsed()) return compare_command(result_dir, oracle);
        if (sweep->parsed())
            return sweep_command(preset_name, config_path, overrides, seeds_text, out_dir,
                                 jobs);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const physarum::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const physarum::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
