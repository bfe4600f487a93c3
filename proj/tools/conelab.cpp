// Command-line front door: run measurement scenarios, list the bundled ones,
// and print op contract text. Exit codes: 0 ok, 2 schema violation, 3 budget
// exceeded, 4 internal invariant breach.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <conelab/scenario.hpp>

namespace {

conelab::json load_scenario(const std::string& arg) {
    if (conelab::is_bundled_scenario(arg)) return conelab::bundled_scenario(arg);
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw conelab::SchemaError("cannot open scenario file " + arg);
    conelab::json sc;
    try {
        in >> sc;
    } catch (const conelab::json::exception& e) {
        throw conelab::SchemaError(std::string("bad scenario JSON: ") + e.what());
    }
    return sc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coned-off graphs, group developments, and boundary profiles"};
    app.require_subcommand(1);

    std::string scenario_arg;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    long long budget_vertices = 0;
    auto* run = app.add_subcommand(
        "run", "run a scenario file or bundled scenario name");
    run->add_option("file", scenario_arg,
                    "scenario JSON file or bundled scenario name")
        ->required();
    run->add_option("--out", out_dir, "output directory (default: out)");
    auto* seed_opt = run->add_option("--seed", seed, "seed for sampled modes");
    auto* budget_opt = run->add_option("--budget-vertices", budget_vertices,
                                       "cap on enumerated vertices/elements");

    app.add_subcommand("list-scenarios", "list the bundled scenarios");

    std::string op_name;
    auto* desc = app.add_subcommand("describe", "print contract text for an op");
    desc->add_option("op", op_name, "op name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            conelab::json sc = load_scenario(scenario_arg);
            conelab::ScenarioSettings st;
            if (seed_opt->count()) st.seed = seed;
            if (budget_opt->count()) {
                if (budget_vertices <= 0)
                    throw conelab::SchemaError("--budget-vertices must be positive");
                st.budget_vertices = budget_vertices;
            }
            conelab::json manifest = conelab::run_scenario(sc, out_dir, st);
            std::cout << manifest.dump(2) << "\n";
        } else if (app.got_subcommand("list-scenarios")) {
            for (const auto& name : conelab::bundled_scenario_names())
                std::cout << name << "\n";
        } else {
            std::cout << conelab::describe_op(op_name) << "\n";
        }
        return 0;
    } catch (const conelab::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const conelab::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const conelab::InternalError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
