#ifndef NAMBU_IDENTITY_HPP
#define NAMBU_IDENTITY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nambu/bracket.hpp"
#include "nambu/polynomial.hpp"

namespace nambu {

// Outcome of an identity check. When the residual is nonzero, `witness` holds
// a rational assignment at which it evaluates to a nonzero number.
struct ResidualReport {
    Polynomial residual;
    bool is_zero;
    std::optional<std::map<Symbol, Rational>> witness;
};

// Deterministic witness search: substitutes the fixed candidate sequence
// 1, -1, 1/2, 2, 3, -2, ... symbol by symbol, keeping the polynomial nonzero
// at every step. Requires p != 0.
std::map<Symbol, Rational> find_nonzero_witness(const Polynomial& p);

// Residual of the fundamental identity, oriented lhs - rhs:
//   {{A,B,C},D,E} - {{A,D,E},B,C} - {A,{B,D,E},C} - {A,B,{C,D,E}}.
ResidualReport fi_residual(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                           const Polynomial& d, const Polynomial& e);

// The same residual evaluated through the closed-form double-sum epsilon
// contraction (overall minus sign included). Independent of fi_residual's
// expansion path; the two must agree exactly.
Polynomial fi_residual_closed_form(const Polynomial& a, const Polynomial& b,
                                   const Polynomial& c, const Polynomial& d,
                                   const Polynomial& e);

// Residual of the Jacobi identity for the noncanonical bracket, oriented
// lhs - rhs: {{A,B},C} - {{A,C},B} - {A,{B,C}}.
ResidualReport jacobi_residual(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                               const PoissonMatrixSet& pms);

// Closed-form contribution of one unordered DOF pair to the Jacobi residual:
//   (d^b_k J^a_ij) J^b_kl (d^a_i A d^a_j B d^b_l C
//                          - d^a_i A d^b_l B d^a_j C
//                          + d^b_l A d^a_i B d^a_j C)   + (a <-> b).
// Summing over all pairs a < b reproduces jacobi_residual exactly.
Polynomial jacobi_pair_residual_closed_form(const Polynomial& a, const Polynomial& b,
                                            const Polynomial& c, const PoissonMatrixSet& pms,
                                            int dof_a, int dof_b);

// True iff no monomial of p mixes variables of distinct DOFs, i.e. p is a sum
// of per-DOF pieces (parameters do not count).
bool check_decoupled(const Polynomial& p);

// True iff every entry of J^a is free of the variables of every other DOF.
// Sufficient for the Jacobi residual to vanish identically.
bool check_poisson_condition(const PoissonMatrixSet& pms);

// One line-delimited JSON record per report:
// {identity_kind, inputs, residual, is_zero, witness}.
std::string report_json_line(const std::string& identity_kind,
                             const std::vector<std::pair<std::string, std::string>>& inputs,
                             const ResidualReport& report);

}  // namespace nambu

#endif
