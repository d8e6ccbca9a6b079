#ifndef NAMBU_CONFIG_HPP
#define NAMBU_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nambu/bracket.hpp"
#include "nambu/dynamics.hpp"

namespace nambu {

class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& what, int line);
    int line() const { return line_; }

  private:
    int line_;
};

// Line-oriented system definition with [system], [parameters], [initial] and
// [integrator] sections. '#' starts a comment; parameter lines are either
// "name" or "name = value"; initial-state lines are "x1_1 = value".
struct SystemConfig {
    int dof_count = 0;
    std::string h_text;
    std::string g_text;
    std::vector<std::string> parameter_names;  // declaration order
    std::map<std::string, double> parameter_values;
    std::optional<std::vector<double>> initial_state;  // 3n values, variable order
    std::optional<double> step_size;
    std::optional<std::int64_t> steps;

    static SystemConfig parse(std::istream& in);
    static SystemConfig parse_file(const std::string& path);

    // The built-in coupled-oscillator model with its default numerics
    // (m1 = m2 = w1sq = w2sq = 1, lambda = 1/10, state (1, 0, 3/2) per mode,
    // dt = 1e-3, 1e5 steps).
    static SystemConfig builtin_model();

    std::string emit() const;

    // Builds the variable space and parses H and G. Throws ConfigError or
    // ParseError on an invalid definition.
    NambuSystem build_system() const;

    ParameterValues assigned_parameters() const;

    bool operator==(const SystemConfig& o) const;
};

}  // namespace nambu

#endif
