#include "nambu/models.hpp"

#include "nambu/dynamics.hpp"
#include "nambu/identity.hpp"

#include <sstream>
#include <tuple>

namespace nambu {

namespace {

Polynomial sym(const SpacePtr& s, const Symbol& x, std::int32_t e = 1) {
    return Polynomial::from_symbol(s, x, e);
}

}  // namespace

SemiclassicalModel build_model() {
    SpacePtr space = VariableSpace::create(2, {"m1", "m2", "w1sq", "w2sq", "lambda"});
    const Symbol m1 = space->parameter("m1");
    const Symbol m2 = space->parameter("m2");
    const Symbol w1sq = space->parameter("w1sq");
    const Symbol w2sq = space->parameter("w2sq");
    const Symbol lambda = space->parameter("lambda");

    const Rational half(1, 2);

    // H = p_a^2/(2 m_a) + (m_a w_a^2 / 2) <q_a^2> summed over both modes,
    // plus the coupling lambda <q_1> <q_2^2>.
    Polynomial h = half * sym(space, m1, -1) * sym(space, space->variable(2, 1), 2);
    h += half * sym(space, m2, -1) * sym(space, space->variable(2, 2), 2);
    h += half * sym(space, m1) * sym(space, w1sq) * sym(space, space->variable(3, 1));
    h += half * sym(space, m2) * sym(space, w2sq) * sym(space, space->variable(3, 2));
    h += sym(space, lambda) * sym(space, space->variable(1, 1)) * sym(space, space->variable(3, 2));

    // G = sum_a (<q_a^2> - <q_a>^2), the per-mode fluctuations.
    Polynomial g = sym(space, space->variable(3, 1)) - sym(space, space->variable(1, 1), 2);
    g += sym(space, space->variable(3, 2)) - sym(space, space->variable(1, 2), 2);

    return SemiclassicalModel{NambuSystem(space, std::move(h), std::move(g)),
                              m1, m2, w1sq, w2sq, lambda};
}

namespace {

std::vector<Polynomial> expected_equations_of_motion(const SemiclassicalModel& model) {
    const SpacePtr& s = model.system.space;
    auto var = [&](int comp, int dof) { return sym(s, s->variable(comp, dof)); };
    const Polynomial m1inv = sym(s, model.m1, -1);
    const Polynomial m2inv = sym(s, model.m2, -1);
    const Polynomial m1w1 = sym(s, model.m1) * sym(s, model.w1sq);
    const Polynomial m2w2 = sym(s, model.m2) * sym(s, model.w2sq);
    const Polynomial lam = sym(s, model.lambda);

    std::vector<Polynomial> rhs;
    rhs.push_back(m1inv * var(2, 1));                                   // d<q1>/dt
    rhs.push_back(-(m1w1 * var(1, 1)) - lam * var(3, 2));               // d<p1>/dt
    rhs.push_back(Rational(2) * m1inv * var(1, 1) * var(2, 1));         // d<q1^2>/dt
    rhs.push_back(m2inv * var(2, 2));                                   // d<q2>/dt
    rhs.push_back(-(m2w2 * var(1, 2)) - Rational(2) * lam * var(1, 1) * var(1, 2));
    rhs.push_back(Rational(2) * m2inv * var(1, 2) * var(2, 2));         // d<q2^2>/dt
    return rhs;
}

// Entries of the G-generated matrices: per mode, [[0,1,0],[-1,0,-2 x1],[0,2 x1,0]].
std::vector<Polynomial> expected_matrices_from_g(const SemiclassicalModel& model) {
    const SpacePtr& s = model.system.space;
    std::vector<Polynomial> entries;
    for (int dof = 1; dof <= 2; ++dof) {
        const Polynomial zero = Polynomial::zero(s);
        const Polynomial one = Polynomial::constant(s, 1);
        const Polynomial two_x1 = Rational(2) * sym(s, s->variable(1, dof));
        entries.push_back(zero);
        entries.push_back(one);
        entries.push_back(zero);
        entries.push_back(-one);
        entries.push_back(zero);
        entries.push_back(-two_x1);
        entries.push_back(zero);
        entries.push_back(two_x1);
        entries.push_back(zero);
    }
    return entries;
}

std::vector<Polynomial> expected_matrices_from_h(const SemiclassicalModel& model) {
    const SpacePtr& s = model.system.space;
    const Rational half(1, 2);
    const Polynomial zero = Polynomial::zero(s);
    const Polynomial lam = sym(s, model.lambda);

    std::vector<Polynomial> entries;
    // Mode 1: [[0, -m1 w1sq/2, x2_1/m1], [m1 w1sq/2, 0, -lambda x3_2],
    //          [-x2_1/m1, lambda x3_2, 0]]
    const Polynomial a12 = -(half * sym(s, model.m1) * sym(s, model.w1sq));
    const Polynomial a13 = sym(s, model.m1, -1) * sym(s, s->variable(2, 1));
    const Polynomial a23 = -(lam * sym(s, s->variable(3, 2)));
    entries.push_back(zero);
    entries.push_back(a12);
    entries.push_back(a13);
    entries.push_back(-a12);
    entries.push_back(zero);
    entries.push_back(a23);
    entries.push_back(-a13);
    entries.push_back(-a23);
    entries.push_back(zero);

    // Mode 2: [[0, -m2 w2sq/2 - lambda x1_1, x2_2/m2], [.., 0, 0], [.., 0, 0]]
    const Polynomial b12 =
        -(half * sym(s, model.m2) * sym(s, model.w2sq)) - lam * sym(s, s->variable(1, 1));
    const Polynomial b13 = sym(s, model.m2, -1) * sym(s, s->variable(2, 2));
    entries.push_back(zero);
    entries.push_back(b12);
    entries.push_back(b13);
    entries.push_back(-b12);
    entries.push_back(zero);
    entries.push_back(zero);
    entries.push_back(-b13);
    entries.push_back(zero);
    entries.push_back(zero);
    return entries;
}

void check_equal(std::vector<ModelFact>& facts, const std::string& name, const Polynomial& actual,
                 const Polynomial& expected, const std::string& where) {
    if (actual == expected) {
        facts.push_back({name, true, ""});
    } else {
        std::ostringstream detail;
        detail << where << ": expected " << expected.str() << ", got " << actual.str();
        facts.push_back({name, false, detail.str()});
    }
}

}  // namespace

std::vector<ModelFact> verify_model() {
    const SemiclassicalModel model = build_model();
    const NambuSystem& sys = model.system;
    const SpacePtr& s = sys.space;
    std::vector<ModelFact> facts;

    // (1) The Nambu field reproduces the semiclassical equations of motion.
    {
        const VectorField vf = vector_field(sys);
        const auto expected = expected_equations_of_motion(model);
        bool ok = true;
        std::ostringstream detail;
        for (int v = 0; v < 6; ++v) {
            if (vf.components[v] != expected[v]) {
                if (!ok) detail << "; ";
                detail << "d" << s->name_of(v) << "/dt: expected " << expected[v].str()
                       << ", got " << vf.components[v].str();
                ok = false;
            }
        }
        facts.push_back({"equations_of_motion", ok, ok ? "" : detail.str()});
    }

    // (2)/(3) Both Poisson matrix sets, entry by entry.
    for (const auto& [fact_name, source, expected] :
         {std::tuple{"poisson_matrices_from_G", PoissonSource::from_g,
                     expected_matrices_from_g(model)},
          std::tuple{"poisson_matrices_from_H", PoissonSource::from_h,
                     expected_matrices_from_h(model)}}) {
        const PoissonMatrixSet pms = poisson_matrices(sys, source);
        bool ok = true;
        std::ostringstream detail;
        for (int dof = 1; dof <= 2; ++dof) {
            for (int i = 1; i <= 3; ++i) {
                for (int j = 1; j <= 3; ++j) {
                    const Polynomial& want = expected[9 * (dof - 1) + 3 * (i - 1) + (j - 1)];
                    if (pms.entry(dof, i, j) != want) {
                        if (!ok) detail << "; ";
                        detail << "J^" << dof << "[" << i << "," << j << "]: expected "
                               << want.str() << ", got " << pms.entry(dof, i, j).str();
                        ok = false;
                    }
                }
            }
        }
        facts.push_back({fact_name, ok, ok ? "" : detail.str()});
    }

    // (4) Fundamental identity violated with residual exactly lambda for
    //     (A,B,C) = (x1_2, x2_2, x2_1) against (D,E) = (H,G).
    {
        const auto report = fi_residual(sym(s, s->variable(1, 2)), sym(s, s->variable(2, 2)),
                                        sym(s, s->variable(2, 1)), sys.hamiltonian_h,
                                        sys.hamiltonian_g);
        check_equal(facts, "fi_violation_value", report.residual, sym(s, model.lambda),
                    "fi residual");
    }

    // (5) Jacobi identity holds for the G-generated bracket on (x2_1, x2_2, H).
    {
        const PoissonMatrixSet pms = poisson_matrices(sys, PoissonSource::from_g);
        const auto report = jacobi_residual(sym(s, s->variable(2, 1)), sym(s, s->variable(2, 2)),
                                            sys.hamiltonian_h, pms);
        check_equal(facts, "jacobi_holds_from_G", report.residual, Polynomial::zero(s),
                    "jacobi residual");
    }

    // (6) Jacobi identity violated for the H-generated bracket: the time-
    //     evolution instance (third slot G) has residual lambda*m1*w1sq*x1_2.
    {
        const PoissonMatrixSet pms = poisson_matrices(sys, PoissonSource::from_h);
        const auto report = jacobi_residual(sym(s, s->variable(2, 1)), sym(s, s->variable(2, 2)),
                                            sys.hamiltonian_g, pms);
        const Polynomial expected =
            sym(s, model.lambda) * sym(s, model.m1) * sym(s, model.w1sq) * sym(s, s->variable(1, 2));
        check_equal(facts, "jacobi_violation_from_H", report.residual, expected, "jacobi residual");
    }

    return facts;
}

bool all_pass(const std::vector<ModelFact>& facts) {
    for (const auto& f : facts) {
        if (!f.pass) return false;
    }
    return true;
}

}  // namespace nambu
