#include "nambu/identity.hpp"

#include <json.hpp>

#include <memory>
#include <stdexcept>

namespace nambu {

namespace {

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b || (a && b && *a == *b)) return;
    throw std::invalid_argument("operands belong to different variable spaces");
}

// Fixed injective sequence of small rationals used for witness assignments.
Rational witness_candidate(std::size_t j) {
    static const Rational table[] = {
        Rational(1),      Rational(-1),     Rational(1, 2), Rational(2),
        Rational(3),      Rational(-2),     Rational(1, 3), Rational(4),
        Rational(-3),     Rational(5),      Rational(-1, 2), Rational(6),
        Rational(-4),     Rational(7),      Rational(3, 2), Rational(-5),
    };
    constexpr std::size_t table_size = sizeof(table) / sizeof(table[0]);
    if (j < table_size) return table[j];
    return Rational(static_cast<long>(j) + 2);  // 18, 19, ... disjoint from the table
}

ResidualReport make_report(Polynomial residual) {
    ResidualReport report{std::move(residual), false, std::nullopt};
    report.is_zero = report.residual.is_zero();
    if (!report.is_zero) report.witness = find_nonzero_witness(report.residual);
    return report;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
    std::vector<Polynomial> grad;
    const int nv = p.space()->variable_count();
    grad.reserve(nv);
    for (int v = 0; v < nv; ++v) grad.push_back(p.derivative_index(v));
    return grad;
}

}  // namespace

std::map<Symbol, Rational> find_nonzero_witness(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no nonzero witness");
    const SpacePtr& space = p.space();
    std::map<Symbol, Rational> witness;
    Polynomial current = p;
    for (int index = 0; index < space->symbol_count(); ++index) {
        // A value among degree+1 distinct candidates must keep `current`
        // nonzero, viewing it as a polynomial in this symbol alone.
        const std::int32_t degree = current.degree_in(index);
        bool placed = false;
        for (std::size_t j = 0; j <= static_cast<std::size_t>(degree); ++j) {
            const Rational value = witness_candidate(j);
            Polynomial next = current.substitute(index, value);
            if (!next.is_zero()) {
                witness.emplace(space->symbol(index), value);
                current = std::move(next);
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("witness search exhausted its candidate grid");
    }
    return witness;
}

ResidualReport fi_residual(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                           const Polynomial& d, const Polynomial& e) {
    Polynomial residual = nambu_bracket(nambu_bracket(a, b, c), d, e);
    residual -= nambu_bracket(nambu_bracket(a, d, e), b, c);
    residual -= nambu_bracket(a, nambu_bracket(b, d, e), c);
    residual -= nambu_bracket(a, b, nambu_bracket(c, d, e));
    return make_report(std::move(residual));
}

Polynomial fi_residual_closed_form(const Polynomial& a, const Polynomial& b,
                                   const Polynomial& c, const Polynomial& d,
                                   const Polynomial& e) {
    require_same_space(a.space(), b.space());
    require_same_space(a.space(), c.space());
    require_same_space(a.space(), d.space());
    require_same_space(a.space(), e.space());
    const SpacePtr& space = a.space();
    const int n = space->dof_count();

    const auto da = gradient(a), db = gradient(b), dc = gradient(c);
    const auto dd = gradient(d), de = gradient(e);

    // prod[beta][j][k] = d^beta_j D * d^beta_k E, differentiated lazily by
    // (alpha, i) on demand.
    auto de_product = [&](int beta, int j, int k) {
        return dd[3 * beta + j] * de[3 * beta + k];
    };
    std::vector<std::unique_ptr<Polynomial>> dde_cache(
        static_cast<std::size_t>(9 * n) * static_cast<std::size_t>(3 * n));
    auto dde = [&](int alpha, int i, int beta, int j, int k) -> const Polynomial& {
        const std::size_t slot =
            static_cast<std::size_t>((beta * 9 + j * 3 + k)) * static_cast<std::size_t>(3 * n) +
            static_cast<std::size_t>(3 * alpha + i);
        if (!dde_cache[slot]) {
            dde_cache[slot] = std::make_unique<Polynomial>(
                de_product(beta, j, k).derivative_index(3 * alpha + i));
        }
        return *dde_cache[slot];
    };

    Polynomial total = Polynomial::zero(space);
    for (int alpha = 0; alpha < n; ++alpha) {
        for (int beta = 0; beta < n; ++beta) {
            for (const auto& e1 : LeviCivita3::nonzero) {
                for (const auto& e2 : LeviCivita3::nonzero) {
                    const int sign = e1.sign * e2.sign;

                    // eps_{i mu nu} eps_{rho j k} d^a_mu A d^a_nu B d^b_rho C
                    {
                        const int i = e1.i - 1, mu = e1.j - 1, nu = e1.k - 1;
                        const int rho = e2.i - 1, j = e2.j - 1, k = e2.k - 1;
                        const Polynomial& fa = da[3 * alpha + mu];
                        const Polynomial& fb = db[3 * alpha + nu];
                        const Polynomial& fc = dc[3 * beta + rho];
                        if (!fa.is_zero() && !fb.is_zero() && !fc.is_zero()) {
                            const Polynomial& tail = dde(alpha, i, beta, j, k);
                            if (!tail.is_zero()) {
                                Polynomial prod = fa * fb * fc * tail;
                                if (sign < 0) total -= prod; else total += prod;
                            }
                        }
                    }
                    // eps_{i nu rho} eps_{mu j k} d^b_mu A d^a_nu B d^a_rho C
                    {
                        const int i = e1.i - 1, nu = e1.j - 1, rho = e1.k - 1;
                        const int mu = e2.i - 1, j = e2.j - 1, k = e2.k - 1;
                        const Polynomial& fa = da[3 * beta + mu];
                        const Polynomial& fb = db[3 * alpha + nu];
                        const Polynomial& fc = dc[3 * alpha + rho];
                        if (!fa.is_zero() && !fb.is_zero() && !fc.is_zero()) {
                            const Polynomial& tail = dde(alpha, i, beta, j, k);
                            if (!tail.is_zero()) {
                                Polynomial prod = fa * fb * fc * tail;
                                if (sign < 0) total -= prod; else total += prod;
                            }
                        }
                    }
                    // eps_{i rho mu} eps_{nu j k} d^a_mu A d^b_nu B d^a_rho C
                    {
                        const int i = e1.i - 1, rho = e1.j - 1, mu = e1.k - 1;
                        const int nu = e2.i - 1, j = e2.j - 1, k = e2.k - 1;
                        const Polynomial& fa = da[3 * alpha + mu];
                        const Polynomial& fb = db[3 * beta + nu];
                        const Polynomial& fc = dc[3 * alpha + rho];
                        if (!fa.is_zero() && !fb.is_zero() && !fc.is_zero()) {
                            const Polynomial& tail = dde(alpha, i, beta, j, k);
                            if (!tail.is_zero()) {
                                Polynomial prod = fa * fb * fc * tail;
                                if (sign < 0) total -= prod; else total += prod;
                            }
                        }
                    }
                }
            }
        }
    }
    return -total;
}

ResidualReport jacobi_residual(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                               const PoissonMatrixSet& pms) {
    Polynomial residual = noncanonical_bracket(noncanonical_bracket(a, b, pms), c, pms);
    residual -= noncanonical_bracket(noncanonical_bracket(a, c, pms), b, pms);
    residual -= noncanonical_bracket(a, noncanonical_bracket(b, c, pms), pms);
    return make_report(std::move(residual));
}

Polynomial jacobi_pair_residual_closed_form(const Polynomial& a, const Polynomial& b,
                                            const Polynomial& c, const PoissonMatrixSet& pms,
                                            int dof_a, int dof_b) {
    if (dof_a == dof_b) throw std::invalid_argument("DOF pair must be distinct");
    require_same_space(a.space(), pms.space());
    require_same_space(b.space(), pms.space());
    require_same_space(c.space(), pms.space());
    const SpacePtr& space = pms.space();

    const auto da = gradient(a), db = gradient(b), dc = gradient(c);

    Polynomial total = Polynomial::zero(space);
    const std::pair<int, int> ordered[2] = {{dof_a, dof_b}, {dof_b, dof_a}};
    for (const auto& [alpha, beta] : ordered) {
        const int abase = 3 * (alpha - 1), bbase = 3 * (beta - 1);
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const Polynomial& jij = pms.entry(alpha, i, j);
                if (jij.is_zero()) continue;
                for (int k = 1; k <= 3; ++k) {
                    const Polynomial dj = jij.derivative_index(bbase + k - 1);
                    if (dj.is_zero()) continue;
                    for (int l = 1; l <= 3; ++l) {
                        const Polynomial& jkl = pms.entry(beta, k, l);
                        if (jkl.is_zero()) continue;

                        Polynomial combo = Polynomial::zero(space);
                        const Polynomial& ai = da[abase + i - 1];
                        const Polynomial& al = da[bbase + l - 1];
                        const Polynomial& bj = db[abase + j - 1];
                        const Polynomial& bl = db[bbase + l - 1];
                        const Polynomial& bi = db[abase + i - 1];
                        const Polynomial& cl = dc[bbase + l - 1];
                        const Polynomial& cj = dc[abase + j - 1];
                        if (!ai.is_zero() && !bj.is_zero() && !cl.is_zero()) combo += ai * bj * cl;
                        if (!ai.is_zero() && !bl.is_zero() && !cj.is_zero()) combo -= ai * bl * cj;
                        if (!al.is_zero() && !bi.is_zero() && !cj.is_zero()) combo += al * bi * cj;
                        if (combo.is_zero()) continue;

                        total += dj * jkl * combo;
                    }
                }
            }
        }
    }
    return total;
}

bool check_decoupled(const Polynomial& p) {
    const SpacePtr& space = p.space();
    for (const auto& [m, coeff] : p.terms()) {
        int seen_dof = 0;
        for (int v = 0; v < space->variable_count(); ++v) {
            if (m.exps[v] == 0) continue;
            const int dof = space->dof_of_index(v);
            if (seen_dof == 0) {
                seen_dof = dof;
            } else if (seen_dof != dof) {
                return false;
            }
        }
    }
    return true;
}

bool check_poisson_condition(const PoissonMatrixSet& pms) {
    const SpacePtr& space = pms.space();
    for (int dof = 1; dof <= pms.dof_count(); ++dof) {
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const Polynomial& e = pms.entry(dof, i, j);
                for (int v = 0; v < space->variable_count(); ++v) {
                    if (space->dof_of_index(v) != dof && e.depends_on_index(v)) return false;
                }
            }
        }
    }
    return true;
}

std::string report_json_line(const std::string& identity_kind,
                             const std::vector<std::pair<std::string, std::string>>& inputs,
                             const ResidualReport& report) {
    nlohmann::ordered_json record;
    record["identity_kind"] = identity_kind;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [slot, text] : inputs) in[slot] = text;
    record["inputs"] = std::move(in);
    record["residual"] = report.residual.str();
    record["is_zero"] = report.is_zero;
    if (report.witness) {
        nlohmann::ordered_json w = nlohmann::ordered_json::object();
        for (const auto& [sym, value] : *report.witness) w[sym.name] = to_string(value);
        record["witness"] = std::move(w);
    } else {
        record["witness"] = nullptr;
    }
    return record.dump();
}

}  // namespace nambu
