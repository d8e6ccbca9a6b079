#ifndef NAMBU_BRACKET_HPP
#define NAMBU_BRACKET_HPP

#include <array>
#include <vector>

#include "nambu/polynomial.hpp"

namespace nambu {

// The 3D alternating symbol as its six nonzero entries.
struct LeviCivita3 {
    struct Entry {
        int i, j, k;
        int sign;
    };
    static constexpr std::array<Entry, 6> nonzero = {{{1, 2, 3, +1},
                                                      {2, 3, 1, +1},
                                                      {3, 1, 2, +1},
                                                      {1, 3, 2, -1},
                                                      {3, 2, 1, -1},
                                                      {2, 1, 3, -1}}};
    static constexpr int sign(int i, int j, int k) {
        return (i - j) * (j - k) * (k - i) / 2;
    }
};

// A variable space with its two generating Hamiltonians.
struct NambuSystem {
    SpacePtr space;
    Polynomial hamiltonian_h;
    Polynomial hamiltonian_g;

    NambuSystem(SpacePtr space, Polynomial h, Polynomial g);
};

enum class PoissonSource { from_g, from_h };

// Per-DOF 3x3 antisymmetric matrices of polynomials: the G-generated form
// J^a_ij = eps_ijk dG/dx_k^a, or the H-generated form with an overall minus,
// Jt^a_ij = -eps_ijk dH/dx_k^a. All nine entries are stored per DOF.
class PoissonMatrixSet {
  public:
    PoissonMatrixSet(SpacePtr space, PoissonSource source, std::vector<Polynomial> entries);

    const SpacePtr& space() const { return space_; }
    PoissonSource source() const { return source_; }
    int dof_count() const;

    // dof in 1..n, i and j in 1..3.
    const Polynomial& entry(int dof, int i, int j) const;

  private:
    SpacePtr space_;
    PoissonSource source_;
    std::vector<Polynomial> entries_;  // row-major, 9 per DOF
};

// {A, B, C} = sum_a eps_ijk d_i^a A d_j^a B d_k^a C. Totally antisymmetric,
// trilinear, a derivation in each slot.
Polynomial nambu_bracket(const Polynomial& a, const Polynomial& b, const Polynomial& c);

PoissonMatrixSet poisson_matrices(const NambuSystem& sys, PoissonSource source);

// {A, B} = sum_a J^a_ij d_i^a A d_j^a B. For a from_g set this equals
// {A, B, G}; for a from_h set it equals -{A, B, H} = {A, H, B}.
Polynomial noncanonical_bracket(const Polynomial& a, const Polynomial& b,
                                const PoissonMatrixSet& pms);

// The single-DOF contribution {A, B}^dof, before summing over DOFs.
Polynomial noncanonical_bracket_component(const Polynomial& a, const Polynomial& b,
                                          const PoissonMatrixSet& pms, int dof);

}  // namespace nambu

#endif
