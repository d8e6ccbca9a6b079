#ifndef NAMBU_DYNAMICS_HPP
#define NAMBU_DYNAMICS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nambu/bracket.hpp"
#include "nambu/polynomial.hpp"

namespace nambu {

// Right-hand sides of the equations of motion, one polynomial per variable in
// the space's variable order.
struct VectorField {
    SpacePtr space;
    std::vector<Polynomial> components;
};

// Field via the Nambu equation: component v = {x_v, H, G}.
VectorField vector_field(const NambuSystem& sys);

// Field via the noncanonical Hamilton equation: component v is the
// noncanonical bracket of x_v with `driver` (H for a from_g set, G for a
// from_h set). Must coincide with the Nambu-equation field exactly.
VectorField vector_field(const PoissonMatrixSet& pms, const Polynomial& driver);

// sum_v d(components[v])/dx_v; exactly zero for any generated field.
Polynomial divergence(const VectorField& vf);

struct IntegratorConfig {
    double step_size = 1e-3;
    std::int64_t steps = 0;
    // Method is fixed: classical 4th-order Runge-Kutta.
};

// Numeric values for parameters, keyed by parameter name.
using ParameterValues = std::map<std::string, double>;

// A polynomial lowered to floating point with parameters substituted,
// evaluable on a raw state vector (indexed by variable index).
class CompiledPolynomial {
  public:
    CompiledPolynomial(const Polynomial& p, const ParameterValues& params);
    double operator()(const double* state) const;
    double operator()(const std::vector<double>& state) const { return (*this)(state.data()); }

  private:
    struct Term {
        double coeff;
        std::vector<std::pair<int, std::int32_t>> powers;  // variable index, exponent > 0
    };
    std::vector<Term> terms_;
};

// A quantity tracked along a trajectory. For drift channels the recorded
// value is (Q(x(t)) - Q(x(0))) / max(1, |Q(x(0))|); otherwise Q(x(t)).
struct DiagnosticChannel {
    std::string name;
    Polynomial quantity;
    bool report_drift = false;
};

// H drift, G drift, and the per-DOF fluctuation values x3_a - x1_a^2.
std::vector<DiagnosticChannel> standard_channels(const NambuSystem& sys);

struct Trajectory {
    SpacePtr space;
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<std::string> channel_names;
    std::vector<std::vector<double>> channel_values;  // one row per time
};

// Thrown when a step produces a non-finite state component.
class IntegrationError : public std::runtime_error {
  public:
    IntegrationError(const std::string& what, std::int64_t step);
    std::int64_t step() const { return step_; }

  private:
    std::int64_t step_;
};

// Fixed-step classical RK4; deterministic bit-for-bit for identical inputs.
Trajectory integrate(const VectorField& vf, const std::vector<double>& x0,
                     const IntegratorConfig& cfg, const ParameterValues& params,
                     const std::vector<DiagnosticChannel>& channels = {});

// max over t of |Q(x(t)) - Q(x(0))| / max(1, |Q(x(0))|).
double conservation_drift(const Trajectory& traj, const Polynomial& quantity,
                          const ParameterValues& params);

// CSV with header "t, x1_1, ..., <channels>"; 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& traj);

}  // namespace nambu

#endif
