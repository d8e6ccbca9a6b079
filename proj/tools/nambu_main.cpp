#include <CLI11.hpp>

#include "nambu/commands.hpp"

#include <array>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

// Loads --config when given, otherwise falls back to the builtin model.
nambu::SystemConfig load_config(const std::optional<std::string>& path) {
    if (path) return nambu::SystemConfig::parse_file(*path);
    return nambu::SystemConfig::builtin_model();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nambu-bracket toolkit: exact identity checks and trajectory integration"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    bool json = false;
    app.add_option("--config", config_path, "system definition file")->expected(1);
    app.add_flag("--json", json, "emit line-delimited JSON records");

    // check-fi
    auto* fi = app.add_subcommand("check-fi", "evaluate the fundamental-identity residual");
    std::vector<std::string> fi_obs;
    std::int64_t fi_trials = 0;
    std::uint32_t fi_seed = 1;
    fi->add_option("observables", fi_obs, "five expressions A B C D E (H and G resolve to the Hamiltonians)")
        ->expected(5);
    fi->add_option("--trials", fi_trials, "additional random quintuples to sweep");
    fi->add_option("--seed", fi_seed, "seed for the randomized sweep");

    // check-jacobi
    auto* jac = app.add_subcommand("check-jacobi", "evaluate the Jacobi residual for a Poisson matrix set");
    std::vector<std::string> jac_obs;
    std::string jac_source = "from_G";
    std::int64_t jac_trials = 0;
    std::uint32_t jac_seed = 1;
    jac->add_option("observables", jac_obs, "three expressions A B C")->expected(3);
    jac->add_option("--source", jac_source, "which Hamiltonian generates the matrices")
        ->check(CLI::IsMember({"from_G", "from_H"}));
    jac->add_option("--trials", jac_trials, "additional random triples to sweep");
    jac->add_option("--seed", jac_seed, "seed for the randomized sweep");

    // simulate
    auto* sim = app.add_subcommand("simulate", "integrate the Nambu flow and write a trajectory CSV");
    std::optional<double> sim_dt;
    std::optional<std::int64_t> sim_steps;
    std::string sim_out = "trajectory.csv";
    sim->add_option("--dt", sim_dt, "step size (overrides config)");
    sim->add_option("--steps", sim_steps, "step count (overrides config)");
    sim->add_option("--out", sim_out, "output CSV path");

    // model-info
    auto* info = app.add_subcommand("model-info", "print the builtin model and certify its facts");
    bool emit_config = false;
    info->add_flag("--emit-config", emit_config, "print a config file reproducing the builtin model");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : nambu::exit_input;
    }

    try {
        if (fi->parsed()) {
            std::array<std::string, 5> obs;
            std::copy_n(fi_obs.begin(), 5, obs.begin());
            nambu::CheckOptions opts{json, fi_trials, fi_seed};
            return nambu::cmd_check_fi(load_config(config_path), obs, opts, std::cout, std::cerr);
        }
        if (jac->parsed()) {
            std::array<std::string, 3> obs;
            std::copy_n(jac_obs.begin(), 3, obs.begin());
            nambu::CheckOptions opts{json, jac_trials, jac_seed};
            const auto source = jac_source == "from_H" ? nambu::PoissonSource::from_h
                                                       : nambu::PoissonSource::from_g;
            return nambu::cmd_check_jacobi(load_config(config_path), source, obs, opts, std::cout,
                                           std::cerr);
        }
        if (sim->parsed()) {
            nambu::SimulateOptions opts{sim_dt, sim_steps, sim_out, json};
            return nambu::cmd_simulate(load_config(config_path), opts, std::cout, std::cerr);
        }
        nambu::ModelInfoOptions opts{json, emit_config};
        return nambu::cmd_model_info(opts, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return nambu::exit_input;
    }
}
