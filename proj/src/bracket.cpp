#include "nambu/bracket.hpp"

#include <stdexcept>

namespace nambu {

namespace {

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b || (a && b && *a == *b)) return;
    throw std::invalid_argument("operands belong to different variable spaces");
}

// All first partials of p, indexed [3*(dof-1) + (comp-1)].
std::vector<Polynomial> gradient(const Polynomial& p) {
    std::vector<Polynomial> grad;
    const int nv = p.space()->variable_count();
    grad.reserve(nv);
    for (int v = 0; v < nv; ++v) grad.push_back(p.derivative_index(v));
    return grad;
}

}  // namespace

NambuSystem::NambuSystem(SpacePtr space_in, Polynomial h, Polynomial g)
    : space(std::move(space_in)), hamiltonian_h(std::move(h)), hamiltonian_g(std::move(g)) {
    require_same_space(space, hamiltonian_h.space());
    require_same_space(space, hamiltonian_g.space());
}

PoissonMatrixSet::PoissonMatrixSet(SpacePtr space, PoissonSource source,
                                   std::vector<Polynomial> entries)
    : space_(std::move(space)), source_(source), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(9 * space_->dof_count())) {
        throw std::invalid_argument("Poisson matrix set needs 9 entries per DOF");
    }
    for (const auto& e : entries_) require_same_space(space_, e.space());
}

int PoissonMatrixSet::dof_count() const { return space_->dof_count(); }

const Polynomial& PoissonMatrixSet::entry(int dof, int i, int j) const {
    if (dof < 1 || dof > dof_count() || i < 1 || i > 3 || j < 1 || j > 3) {
        throw std::out_of_range("Poisson matrix index out of range");
    }
    return entries_[9 * (dof - 1) + 3 * (i - 1) + (j - 1)];
}

Polynomial nambu_bracket(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    require_same_space(a.space(), b.space());
    require_same_space(a.space(), c.space());
    const SpacePtr& space = a.space();

    const auto da = gradient(a), db = gradient(b), dc = gradient(c);

    Polynomial acc = Polynomial::zero(space);
    for (int dof = 0; dof < space->dof_count(); ++dof) {
        const int base = 3 * dof;
        for (const auto& e : LeviCivita3::nonzero) {
            const Polynomial& pa = da[base + e.i - 1];
            if (pa.is_zero()) continue;
            const Polynomial& pb = db[base + e.j - 1];
            if (pb.is_zero()) continue;
            const Polynomial& pc = dc[base + e.k - 1];
            if (pc.is_zero()) continue;
            Polynomial prod = pa * pb * pc;
            if (e.sign < 0) {
                acc -= prod;
            } else {
                acc += prod;
            }
        }
    }
    return acc;
}

PoissonMatrixSet poisson_matrices(const NambuSystem& sys, PoissonSource source) {
    const Polynomial& gen = source == PoissonSource::from_g ? sys.hamiltonian_g : sys.hamiltonian_h;
    const auto dgen = gradient(gen);

    std::vector<Polynomial> entries;
    entries.reserve(9 * sys.space->dof_count());
    for (int dof = 1; dof <= sys.space->dof_count(); ++dof) {
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                Polynomial e = Polynomial::zero(sys.space);
                for (int k = 1; k <= 3; ++k) {
                    const int sign = LeviCivita3::sign(i, j, k);
                    if (sign == 0) continue;
                    const Polynomial& d = dgen[3 * (dof - 1) + (k - 1)];
                    if (d.is_zero()) continue;
                    // The H-generated form carries the opposite sign.
                    const int s = source == PoissonSource::from_h ? -sign : sign;
                    if (s > 0) {
                        e += d;
                    } else {
                        e -= d;
                    }
                }
                entries.push_back(std::move(e));
            }
        }
    }
    return PoissonMatrixSet(sys.space, source, std::move(entries));
}

Polynomial noncanonical_bracket_component(const Polynomial& a, const Polynomial& b,
                                          const PoissonMatrixSet& pms, int dof) {
    require_same_space(a.space(), pms.space());
    require_same_space(b.space(), pms.space());
    const int base = 3 * (dof - 1);

    Polynomial acc = Polynomial::zero(pms.space());
    for (int i = 1; i <= 3; ++i) {
        const Polynomial dai = a.derivative_index(base + i - 1);
        if (dai.is_zero()) continue;
        for (int j = 1; j <= 3; ++j) {
            const Polynomial& jij = pms.entry(dof, i, j);
            if (jij.is_zero()) continue;
            const Polynomial dbj = b.derivative_index(base + j - 1);
            if (dbj.is_zero()) continue;
            acc += jij * dai * dbj;
        }
    }
    return acc;
}

Polynomial noncanonical_bracket(const Polynomial& a, const Polynomial& b,
                                const PoissonMatrixSet& pms) {
    Polynomial acc = Polynomial::zero(pms.space());
    for (int dof = 1; dof <= pms.dof_count(); ++dof) {
        acc += noncanonical_bracket_component(a, b, pms, dof);
    }
    return acc;
}

}  // namespace nambu
