#ifndef NAMBU_COMMANDS_HPP
#define NAMBU_COMMANDS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nambu/config.hpp"

namespace nambu {

// Stable exit-code contract shared by all subcommands.
enum ExitCode : int {
    exit_ok = 0,         // identity holds / run completed
    exit_violated = 1,   // identity violated
    exit_input = 2,      // config or expression error
    exit_numeric = 3,    // non-finite state during integration
};

struct CheckOptions {
    bool json = false;
    std::int64_t trials = 0;  // > 0 adds a randomized sweep over the config's space
    std::uint32_t seed = 1;
};

int cmd_check_fi(const SystemConfig& config, const std::array<std::string, 5>& observables,
                 const CheckOptions& opts, std::ostream& out, std::ostream& err);

int cmd_check_jacobi(const SystemConfig& config, PoissonSource source,
                     const std::array<std::string, 3>& observables, const CheckOptions& opts,
                     std::ostream& out, std::ostream& err);

struct SimulateOptions {
    std::optional<double> step_size;   // overrides config
    std::optional<std::int64_t> steps; // overrides config
    std::string output_path;
    bool json = false;
};

int cmd_simulate(const SystemConfig& config, const SimulateOptions& opts, std::ostream& out,
                 std::ostream& err);

struct ModelInfoOptions {
    bool json = false;
    bool emit_config = false;
};

int cmd_model_info(const ModelInfoOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace nambu

#endif
