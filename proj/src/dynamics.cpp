#include "nambu/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace nambu {

VectorField vector_field(const NambuSystem& sys) {
    VectorField vf{sys.space, {}};
    vf.components.reserve(sys.space->variable_count());
    for (int v = 0; v < sys.space->variable_count(); ++v) {
        Polynomial xv = Polynomial::from_symbol(sys.space, sys.space->symbol(v));
        vf.components.push_back(nambu_bracket(xv, sys.hamiltonian_h, sys.hamiltonian_g));
    }
    return vf;
}

VectorField vector_field(const PoissonMatrixSet& pms, const Polynomial& driver) {
    VectorField vf{pms.space(), {}};
    vf.components.reserve(pms.space()->variable_count());
    for (int v = 0; v < pms.space()->variable_count(); ++v) {
        Polynomial xv = Polynomial::from_symbol(pms.space(), pms.space()->symbol(v));
        vf.components.push_back(noncanonical_bracket(xv, driver, pms));
    }
    return vf;
}

Polynomial divergence(const VectorField& vf) {
    Polynomial acc = Polynomial::zero(vf.space);
    for (int v = 0; v < static_cast<int>(vf.components.size()); ++v) {
        acc += vf.components[v].derivative_index(v);
    }
    return acc;
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p, const ParameterValues& params) {
    const SpacePtr& space = p.space();
    terms_.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        Term t;
        t.coeff = c.get_d();
        for (int i = 0; i < space->symbol_count(); ++i) {
            const std::int32_t e = m.exps[i];
            if (e == 0) continue;
            if (space->index_is_variable(i)) {
                t.powers.emplace_back(i, e);
                continue;
            }
            const auto it = params.find(space->name_of(i));
            if (it == params.end()) {
                throw std::invalid_argument("no value for parameter '" + space->name_of(i) + "'");
            }
            if (it->second == 0.0 && e < 0) {
                throw std::domain_error("parameter '" + space->name_of(i) +
                                        "' is zero but appears inverted");
            }
            t.coeff *= std::pow(it->second, static_cast<double>(e));
        }
        terms_.push_back(std::move(t));
    }
}

double CompiledPolynomial::operator()(const double* state) const {
    double total = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (const auto& [index, e] : t.powers) {
            double acc = 1.0;
            const double x = state[index];
            for (std::int32_t n = 0; n < e; ++n) acc *= x;
            v *= acc;
        }
        total += v;
    }
    return total;
}

std::vector<DiagnosticChannel> standard_channels(const NambuSystem& sys) {
    std::vector<DiagnosticChannel> channels;
    channels.push_back({"H_drift", sys.hamiltonian_h, true});
    channels.push_back({"G_drift", sys.hamiltonian_g, true});
    for (int dof = 1; dof <= sys.space->dof_count(); ++dof) {
        Polynomial q1 = Polynomial::from_symbol(sys.space, sys.space->variable(1, dof));
        Polynomial q2 = Polynomial::from_symbol(sys.space, sys.space->variable(3, dof));
        channels.push_back({"fluct_" + std::to_string(dof), q2 - q1 * q1, false});
    }
    return channels;
}

IntegrationError::IntegrationError(const std::string& what, std::int64_t step)
    : std::runtime_error(what), step_(step) {}

Trajectory integrate(const VectorField& vf, const std::vector<double>& x0,
                     const IntegratorConfig& cfg, const ParameterValues& params,
                     const std::vector<DiagnosticChannel>& channels) {
    const int dim = static_cast<int>(vf.components.size());
    if (static_cast<int>(x0.size()) != dim) {
        throw std::invalid_argument("initial state has wrong dimension");
    }
    if (!(cfg.step_size > 0)) throw std::invalid_argument("step size must be positive");
    if (cfg.steps < 0) throw std::invalid_argument("step count must be nonnegative");

    std::vector<CompiledPolynomial> field;
    field.reserve(dim);
    for (const auto& comp : vf.components) field.emplace_back(comp, params);

    std::vector<CompiledPolynomial> tracked;
    tracked.reserve(channels.size());
    for (const auto& ch : channels) tracked.emplace_back(ch.quantity, params);

    Trajectory traj;
    traj.space = vf.space;
    traj.times.reserve(cfg.steps + 1);
    traj.states.reserve(cfg.steps + 1);
    for (const auto& ch : channels) traj.channel_names.push_back(ch.name);

    std::vector<double> q0(channels.size());
    auto record = [&](double t, const std::vector<double>& x) {
        traj.times.push_back(t);
        traj.states.push_back(x);
        std::vector<double> row(channels.size());
        for (std::size_t c = 0; c < channels.size(); ++c) {
            const double q = tracked[c](x);
            row[c] = channels[c].report_drift
                         ? (q - q0[c]) / std::max(1.0, std::abs(q0[c]))
                         : q;
        }
        traj.channel_values.push_back(std::move(row));
    };

    std::vector<double> x = x0;
    for (int i = 0; i < dim; ++i) {
        if (!std::isfinite(x[i])) throw IntegrationError("non-finite initial state", 0);
    }
    for (std::size_t c = 0; c < channels.size(); ++c) q0[c] = tracked[c](x);
    record(0.0, x);

    const double dt = cfg.step_size;
    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    auto eval = [&](const std::vector<double>& s, std::vector<double>& out) {
        for (int i = 0; i < dim; ++i) out[i] = field[i](s.data());
    };

    for (std::int64_t step = 1; step <= cfg.steps; ++step) {
        eval(x, k1);
        for (int i = 0; i < dim; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
        eval(tmp, k2);
        for (int i = 0; i < dim; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
        eval(tmp, k3);
        for (int i = 0; i < dim; ++i) tmp[i] = x[i] + dt * k3[i];
        eval(tmp, k4);
        for (int i = 0; i < dim; ++i) {
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        for (int i = 0; i < dim; ++i) {
            if (!std::isfinite(x[i])) {
                throw IntegrationError("non-finite state at step " + std::to_string(step), step);
            }
        }
        record(static_cast<double>(step) * dt, x);
    }
    return traj;
}

double conservation_drift(const Trajectory& traj, const Polynomial& quantity,
                          const ParameterValues& params) {
    if (traj.states.empty()) return 0.0;
    const CompiledPolynomial q(quantity, params);
    const double q0 = q(traj.states.front());
    const double scale = std::max(1.0, std::abs(q0));
    double worst = 0.0;
    for (const auto& state : traj.states) {
        worst = std::max(worst, std::abs(q(state) - q0) / scale);
    }
    return worst;
}

void write_csv(std::ostream& out, const Trajectory& traj) {
    out << "t";
    for (int v = 0; v < traj.space->variable_count(); ++v) {
        out << ", " << traj.space->name_of(v);
    }
    for (const auto& name : traj.channel_names) out << ", " << name;
    out << "\n";

    char buf[32];
    auto put = [&](double value) {
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        out << buf;
    };
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        put(traj.times[row]);
        for (double v : traj.states[row]) {
            out << ", ";
            put(v);
        }
        for (double v : traj.channel_values[row]) {
            out << ", ";
            put(v);
        }
        out << "\n";
    }
}

}  // namespace nambu
