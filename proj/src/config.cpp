#include "nambu/config.hpp"

#include "nambu/parser.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nambu {

ConfigError::ConfigError(const std::string& what, int line)
    : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Accepts plain decimals and exact "p/q" fractions.
double parse_number(const std::string& text, int line) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError("empty numeric value", line);
    if (auto slash = t.find('/'); slash != std::string::npos) {
        const std::string num = trim(t.substr(0, slash)), den = trim(t.substr(slash + 1));
        try {
            const double d = std::stod(den);
            if (d == 0) throw ConfigError("zero denominator", line);
            return std::stod(num) / d;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad numeric value '" + t + "'", line);
        }
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw ConfigError("bad numeric value '" + t + "'", line);
        if (!std::isfinite(v)) throw ConfigError("numeric value must be finite", line);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value '" + t + "'", line);
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

SystemConfig SystemConfig::parse(std::istream& in) {
    SystemConfig cfg;
    std::map<std::string, double> initial_by_name;
    std::string section;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string text = raw;
        if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        text = trim(text);
        if (text.empty()) continue;

        if (text.front() == '[') {
            if (text.back() != ']') throw ConfigError("unterminated section header", line);
            section = trim(text.substr(1, text.size() - 2));
            if (section != "system" && section != "parameters" && section != "initial" &&
                section != "integrator") {
                throw ConfigError("unknown section '" + section + "'", line);
            }
            continue;
        }
        if (section.empty()) throw ConfigError("entry before any section header", line);

        std::string key = text, value;
        bool has_value = false;
        if (auto eq = text.find('='); eq != std::string::npos) {
            key = trim(text.substr(0, eq));
            value = trim(text.substr(eq + 1));
            has_value = true;
        }
        if (key.empty()) throw ConfigError("missing key", line);

        if (section == "system") {
            if (!has_value) throw ConfigError("expected 'key = value'", line);
            if (key == "n") {
                try {
                    cfg.dof_count = std::stoi(value);
                } catch (const std::exception&) {
                    throw ConfigError("bad DOF count '" + value + "'", line);
                }
                if (cfg.dof_count < 1) throw ConfigError("DOF count must be positive", line);
            } else if (key == "H") {
                cfg.h_text = value;
            } else if (key == "G") {
                cfg.g_text = value;
            } else {
                throw ConfigError("unknown system key '" + key + "'", line);
            }
        } else if (section == "parameters") {
            for (const auto& existing : cfg.parameter_names) {
                if (existing == key) throw ConfigError("duplicate parameter '" + key + "'", line);
            }
            cfg.parameter_names.push_back(key);
            if (has_value) cfg.parameter_values[key] = parse_number(value, line);
        } else if (section == "initial") {
            if (!has_value) throw ConfigError("expected 'x<i>_<dof> = value'", line);
            if (!looks_like_variable_name(key)) {
                throw ConfigError("'" + key + "' is not a variable name", line);
            }
            if (initial_by_name.count(key)) {
                throw ConfigError("duplicate initial value for '" + key + "'", line);
            }
            initial_by_name[key] = parse_number(value, line);
        } else {  // integrator
            if (!has_value) throw ConfigError("expected 'key = value'", line);
            if (key == "dt") {
                const double dt = parse_number(value, line);
                if (!(dt > 0)) throw ConfigError("dt must be positive", line);
                cfg.step_size = dt;
            } else if (key == "steps") {
                try {
                    cfg.steps = std::stoll(value);
                } catch (const std::exception&) {
                    throw ConfigError("bad step count '" + value + "'", line);
                }
                if (*cfg.steps < 0) throw ConfigError("steps must be nonnegative", line);
            } else {
                throw ConfigError("unknown integrator key '" + key + "'", line);
            }
        }
    }

    if (cfg.dof_count == 0) throw ConfigError("missing 'n' in [system]", line);
    if (cfg.h_text.empty()) throw ConfigError("missing 'H' in [system]", line);
    if (cfg.g_text.empty()) throw ConfigError("missing 'G' in [system]", line);

    if (!initial_by_name.empty()) {
        std::vector<double> state(3 * cfg.dof_count, 0.0);
        std::vector<bool> seen(3 * cfg.dof_count, false);
        for (const auto& [name, value] : initial_by_name) {
            const auto us = name.find('_');
            int comp = 0, dof = 0;
            try {
                comp = std::stoi(name.substr(1, us - 1));
                dof = std::stoi(name.substr(us + 1));
            } catch (const std::exception&) {
                throw ConfigError("bad variable name '" + name + "'", line);
            }
            if (comp < 1 || comp > 3 || dof < 1 || dof > cfg.dof_count) {
                throw ConfigError("variable '" + name + "' outside the declared space", line);
            }
            const int index = VariableSpace::variable_index(comp, dof);
            state[index] = value;
            seen[index] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!seen[i]) {
                throw ConfigError("initial state incomplete: missing x" +
                                      std::to_string(static_cast<int>(i) % 3 + 1) + "_" +
                                      std::to_string(static_cast<int>(i) / 3 + 1),
                                  line);
            }
        }
        cfg.initial_state = std::move(state);
    }
    return cfg;
}

SystemConfig SystemConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'", 0);
    return parse(in);
}

SystemConfig SystemConfig::builtin_model() {
    SystemConfig cfg;
    cfg.dof_count = 2;
    cfg.h_text =
        "(1/(2*m1))*x2_1^2 + (1/(2*m2))*x2_2^2 + (m1*w1sq/2)*x3_1 + (m2*w2sq/2)*x3_2 "
        "+ lambda*x1_1*x3_2";
    cfg.g_text = "x3_1 - x1_1^2 + x3_2 - x1_2^2";
    cfg.parameter_names = {"m1", "m2", "w1sq", "w2sq", "lambda"};
    cfg.parameter_values = {{"m1", 1.0}, {"m2", 1.0}, {"w1sq", 1.0}, {"w2sq", 1.0},
                            {"lambda", 0.1}};
    cfg.initial_state = std::vector<double>{1.0, 0.0, 1.5, 1.0, 0.0, 1.5};
    cfg.step_size = 1e-3;
    cfg.steps = 100000;
    return cfg;
}

std::string SystemConfig::emit() const {
    std::ostringstream out;
    out << "[system]\n";
    out << "n = " << dof_count << "\n";
    out << "H = " << h_text << "\n";
    out << "G = " << g_text << "\n";
    if (!parameter_names.empty()) {
        out << "\n[parameters]\n";
        for (const auto& name : parameter_names) {
            auto it = parameter_values.find(name);
            if (it != parameter_values.end()) {
                out << name << " = " << format_double(it->second) << "\n";
            } else {
                out << name << "\n";
            }
        }
    }
    if (initial_state) {
        out << "\n[initial]\n";
        for (int index = 0; index < 3 * dof_count; ++index) {
            out << "x" << index % 3 + 1 << "_" << index / 3 + 1 << " = "
                << format_double((*initial_state)[index]) << "\n";
        }
    }
    if (step_size || steps) {
        out << "\n[integrator]\n";
        if (step_size) out << "dt = " << format_double(*step_size) << "\n";
        if (steps) out << "steps = " << *steps << "\n";
    }
    return out.str();
}

NambuSystem SystemConfig::build_system() const {
    SpacePtr space = VariableSpace::create(dof_count, parameter_names);
    Polynomial h = nambu::parse(h_text, space);
    Polynomial g = nambu::parse(g_text, space);
    return NambuSystem(std::move(space), std::move(h), std::move(g));
}

ParameterValues SystemConfig::assigned_parameters() const {
    return parameter_values;
}

bool SystemConfig::operator==(const SystemConfig& o) const {
    return dof_count == o.dof_count && h_text == o.h_text && g_text == o.g_text &&
           parameter_names == o.parameter_names && parameter_values == o.parameter_values &&
           initial_state == o.initial_state && step_size == o.step_size && steps == o.steps;
}

}  // namespace nambu
