#include "nambu/commands.hpp"

#include "nambu/dynamics.hpp"
#include "nambu/identity.hpp"
#include "nambu/models.hpp"
#include "nambu/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace nambu {

namespace {

const char* source_name(PoissonSource source) {
    return source == PoissonSource::from_g ? "from_G" : "from_H";
}

// Sparse random polynomial for sweep mode; degree <= 3 over the variables,
// occasionally multiplied by a declared parameter.
Polynomial random_polynomial(std::mt19937& rng, const SpacePtr& space) {
    std::uniform_int_distribution<int> term_count(1, 4);
    std::uniform_int_distribution<int> degree(0, 3);
    std::uniform_int_distribution<int> var(0, space->variable_count() - 1);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> with_param(0, 2);

    Polynomial p = Polynomial::zero(space);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        int n = num(rng);
        if (n == 0) n = 1;
        Polynomial mono = Polynomial::constant(space, Rational(n, den(rng)));
        const int d = degree(rng);
        for (int u = 0; u < d; ++u) {
            mono = mono * Polynomial::from_symbol(space, space->symbol(var(rng)));
        }
        if (space->parameter_count() > 0 && with_param(rng) == 0) {
            std::uniform_int_distribution<int> par(space->variable_count(),
                                                   space->symbol_count() - 1);
            mono = mono * Polynomial::from_symbol(space, space->symbol(par(rng)));
        }
        p += mono;
    }
    return p;
}

void print_report_text(std::ostream& out, const ResidualReport& report) {
    out << "residual = " << report.residual.str() << "\n";
    out << "is_zero: " << (report.is_zero ? "true" : "false") << "\n";
    if (report.witness) {
        out << "witness:";
        bool first = true;
        for (const auto& [sym, value] : *report.witness) {
            out << (first ? " " : ", ") << sym.name << " = " << to_string(value);
            first = false;
        }
        out << "\n";
    }
}

int input_error(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
}

}  // namespace

int cmd_check_fi(const SystemConfig& config, const std::array<std::string, 5>& observables,
                 const CheckOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const NambuSystem sys = config.build_system();
        const std::map<std::string, Polynomial> bindings = {{"H", sys.hamiltonian_h},
                                                            {"G", sys.hamiltonian_g}};
        std::vector<Polynomial> parsed;
        for (const auto& text : observables) {
            parsed.push_back(parse(text, sys.space, bindings));
        }
        const ResidualReport report =
            fi_residual(parsed[0], parsed[1], parsed[2], parsed[3], parsed[4]);

        if (opts.json) {
            const char* slots[5] = {"A", "B", "C", "D", "E"};
            std::vector<std::pair<std::string, std::string>> inputs;
            for (int i = 0; i < 5; ++i) inputs.emplace_back(slots[i], parsed[i].str());
            out << report_json_line("fundamental", inputs, report) << "\n";
        } else {
            out << "identity: fundamental\n";
            print_report_text(out, report);
        }

        bool violated = !report.is_zero;
        if (opts.trials > 0) {
            std::mt19937 rng(opts.seed);
            std::int64_t bad = 0;
            for (std::int64_t t = 0; t < opts.trials; ++t) {
                std::vector<Polynomial> obs;
                for (int i = 0; i < 5; ++i) obs.push_back(random_polynomial(rng, sys.space));
                const auto sweep = fi_residual(obs[0], obs[1], obs[2], obs[3], obs[4]);
                if (!sweep.is_zero) {
                    ++bad;
                    if (opts.json) {
                        const char* slots[5] = {"A", "B", "C", "D", "E"};
                        std::vector<std::pair<std::string, std::string>> inputs;
                        for (int i = 0; i < 5; ++i) inputs.emplace_back(slots[i], obs[i].str());
                        out << report_json_line("fundamental", inputs, sweep) << "\n";
                    }
                }
            }
            if (!opts.json) {
                out << "sweep: " << opts.trials << " random quintuples, " << bad
                    << " violation(s)\n";
            }
            violated = violated || bad > 0;
        }
        return violated ? exit_violated : exit_ok;
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
}

int cmd_check_jacobi(const SystemConfig& config, PoissonSource source,
                     const std::array<std::string, 3>& observables, const CheckOptions& opts,
                     std::ostream& out, std::ostream& err) {
    try {
        const NambuSystem sys = config.build_system();
        const std::map<std::string, Polynomial> bindings = {{"H", sys.hamiltonian_h},
                                                            {"G", sys.hamiltonian_g}};
        std::vector<Polynomial> parsed;
        for (const auto& text : observables) {
            parsed.push_back(parse(text, sys.space, bindings));
        }
        const PoissonMatrixSet pms = poisson_matrices(sys, source);
        const bool condition = check_poisson_condition(pms);
        const ResidualReport report = jacobi_residual(parsed[0], parsed[1], parsed[2], pms);

        if (opts.json) {
            const char* slots[3] = {"A", "B", "C"};
            std::vector<std::pair<std::string, std::string>> inputs;
            for (int i = 0; i < 3; ++i) inputs.emplace_back(slots[i], parsed[i].str());
            inputs.emplace_back("source", source_name(source));
            inputs.emplace_back("condition", condition ? "satisfied" : "violated");
            out << report_json_line("jacobi", inputs, report) << "\n";
        } else {
            out << "identity: jacobi (source: " << source_name(source) << ")\n";
            out << "condition: " << (condition ? "satisfied" : "violated") << "\n";
            print_report_text(out, report);
        }

        bool violated = !report.is_zero;
        if (opts.trials > 0) {
            std::mt19937 rng(opts.seed);
            std::int64_t bad = 0;
            for (std::int64_t t = 0; t < opts.trials; ++t) {
                const Polynomial a = random_polynomial(rng, sys.space);
                const Polynomial b = random_polynomial(rng, sys.space);
                const Polynomial c = random_polynomial(rng, sys.space);
                if (!jacobi_residual(a, b, c, pms).is_zero) ++bad;
            }
            if (!opts.json) {
                out << "sweep: " << opts.trials << " random triples, " << bad << " violation(s)\n";
            }
            violated = violated || bad > 0;
        }
        return violated ? exit_violated : exit_ok;
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
}

int cmd_simulate(const SystemConfig& config, const SimulateOptions& opts, std::ostream& out,
                 std::ostream& err) {
    Trajectory traj;
    std::vector<std::string> drift_names;
    try {
        const NambuSystem sys = config.build_system();
        if (!config.initial_state) {
            throw std::invalid_argument("no initial state in config");
        }
        IntegratorConfig icfg;
        icfg.step_size = opts.step_size.value_or(config.step_size.value_or(1e-3));
        icfg.steps = opts.steps.value_or(config.steps.value_or(100000));

        const VectorField vf = vector_field(sys);
        const auto channels = standard_channels(sys);
        traj = integrate(vf, *config.initial_state, icfg, config.assigned_parameters(), channels);
    } catch (const IntegrationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::exception& e) {
        return input_error(err, e);
    }

    const std::string path = opts.output_path.empty() ? "trajectory.csv" : opts.output_path;
    std::ofstream file(path);
    if (!file) {
        err << "error: cannot write '" << path << "'\n";
        return exit_input;
    }
    write_csv(file, traj);

    // Worst relative drift per tracked conserved quantity.
    std::map<std::string, double> drift;
    for (std::size_t c = 0; c < traj.channel_names.size(); ++c) {
        const std::string& name = traj.channel_names[c];
        double worst = 0.0;
        if (name.ends_with("_drift")) {
            for (const auto& row : traj.channel_values) {
                worst = std::max(worst, std::abs(row[c]));
            }
        } else {
            const double q0 = traj.channel_values.front()[c];
            const double scale = std::max(1.0, std::abs(q0));
            for (const auto& row : traj.channel_values) {
                worst = std::max(worst, std::abs(row[c] - q0) / scale);
            }
        }
        drift[name] = worst;
    }

    if (opts.json) {
        nlohmann::ordered_json record;
        record["output"] = path;
        record["samples"] = traj.times.size();
        record["t_end"] = traj.times.back();
        nlohmann::ordered_json d = nlohmann::ordered_json::object();
        for (const auto& [name, value] : drift) d[name] = value;
        record["max_relative_drift"] = std::move(d);
        out << record.dump() << "\n";
    } else {
        out << "wrote " << path << " (" << traj.times.size() << " samples, t_end = "
            << traj.times.back() << ")\n";
        out << "max relative drift:";
        bool first = true;
        for (const auto& [name, value] : drift) {
            out << (first ? " " : ", ") << name << " = " << value;
            first = false;
        }
        out << "\n";
    }
    return exit_ok;
}

int cmd_model_info(const ModelInfoOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.emit_config) {
            out << SystemConfig::builtin_model().emit();
            return exit_ok;
        }

        const SemiclassicalModel model = build_model();
        const NambuSystem& sys = model.system;
        const auto facts = verify_model();

        if (opts.json) {
            nlohmann::ordered_json record;
            record["n"] = sys.space->dof_count();
            record["variables"] = std::vector<std::string>(
                sys.space->names().begin(), sys.space->names().begin() + 6);
            record["parameters"] = sys.space->parameter_names();
            record["H"] = sys.hamiltonian_h.str();
            record["G"] = sys.hamiltonian_g.str();
            record["H_decoupled"] = check_decoupled(sys.hamiltonian_h);
            record["G_decoupled"] = check_decoupled(sys.hamiltonian_g);
            for (PoissonSource source : {PoissonSource::from_g, PoissonSource::from_h}) {
                const PoissonMatrixSet pms = poisson_matrices(sys, source);
                nlohmann::ordered_json mats = nlohmann::ordered_json::array();
                for (int dof = 1; dof <= 2; ++dof) {
                    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                    for (int i = 1; i <= 3; ++i) {
                        nlohmann::ordered_json row = nlohmann::ordered_json::array();
                        for (int j = 1; j <= 3; ++j) row.push_back(pms.entry(dof, i, j).str());
                        rows.push_back(std::move(row));
                    }
                    mats.push_back(std::move(rows));
                }
                record[std::string("matrices_") + source_name(source)] = std::move(mats);
                record[std::string("condition_") + source_name(source)] =
                    check_poisson_condition(pms);
            }
            nlohmann::ordered_json fj = nlohmann::ordered_json::array();
            for (const auto& f : facts) {
                nlohmann::ordered_json e;
                e["name"] = f.name;
                e["pass"] = f.pass;
                if (!f.pass) e["detail"] = f.detail;
                fj.push_back(std::move(e));
            }
            record["facts"] = std::move(fj);
            out << record.dump() << "\n";
        } else {
            out << "builtin model: two coupled oscillators, semiclassical closure (n = 2)\n";
            out << "variables:";
            for (int v = 0; v < 6; ++v) out << " " << sys.space->name_of(v);
            out << "\nparameters:";
            for (const auto& p : sys.space->parameter_names()) out << " " << p;
            out << "\n\nH = " << sys.hamiltonian_h.str() << "\n";
            out << "G = " << sys.hamiltonian_g.str() << "\n";
            out << "decoupling: H " << (check_decoupled(sys.hamiltonian_h) ? "decoupled" : "coupled")
                << ", G " << (check_decoupled(sys.hamiltonian_g) ? "decoupled" : "coupled") << "\n";

            for (PoissonSource source : {PoissonSource::from_g, PoissonSource::from_h}) {
                const PoissonMatrixSet pms = poisson_matrices(sys, source);
                out << "\nPoisson matrices (" << source_name(source) << "), condition "
                    << (check_poisson_condition(pms) ? "satisfied" : "violated") << ":\n";
                for (int dof = 1; dof <= 2; ++dof) {
                    out << "  J^" << dof << ":\n";
                    for (int i = 1; i <= 3; ++i) {
                        out << "    [";
                        for (int j = 1; j <= 3; ++j) {
                            out << (j > 1 ? ", " : "") << pms.entry(dof, i, j).str();
                        }
                        out << "]\n";
                    }
                }
            }

            out << "\nmodel facts:\n";
            for (const auto& f : facts) {
                out << "  " << (f.pass ? "PASS" : "FAIL") << "  " << f.name;
                if (!f.pass) out << "  (" << f.detail << ")";
                out << "\n";
            }
        }
        return all_pass(facts) ? exit_ok : exit_violated;
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
}

}  // namespace nambu
