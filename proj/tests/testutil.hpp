#ifndef NAMBU_TESTS_TESTUTIL_HPP
#define NAMBU_TESTS_TESTUTIL_HPP

#include <random>
#include <vector>

#include "nambu/polynomial.hpp"

namespace nambu::testutil {

// Deterministic sparse random polynomials for property tests.
class PolyGen {
  public:
    explicit PolyGen(std::uint32_t seed) : rng_(seed) {}

    std::mt19937& rng() { return rng_; }

    Rational random_coeff() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        int n = num(rng_);
        if (n == 0) n = 1;
        Rational r(n, den(rng_));
        r.canonicalize();
        return r;
    }

    // Random polynomial of total variable-degree <= max_degree. When dof > 0,
    // variables are drawn from that DOF only.
    Polynomial random_poly(const SpacePtr& space, int max_degree, int max_terms,
                           bool with_params = true, int dof = 0) {
        std::uniform_int_distribution<int> term_count(1, max_terms);
        std::uniform_int_distribution<int> degree(0, max_degree);
        const int lo = dof > 0 ? 3 * (dof - 1) : 0;
        const int hi = dof > 0 ? 3 * dof - 1 : space->variable_count() - 1;
        std::uniform_int_distribution<int> var(lo, hi);
        std::uniform_int_distribution<int> param_roll(0, 2);

        Polynomial p = Polynomial::zero(space);
        const int terms = term_count(rng_);
        for (int t = 0; t < terms; ++t) {
            Polynomial mono = Polynomial::constant(space, random_coeff());
            const int d = degree(rng_);
            for (int u = 0; u < d; ++u) {
                mono = mono * Polynomial::from_symbol(space, space->symbol(var(rng_)));
            }
            if (with_params && space->parameter_count() > 0 && param_roll(rng_) == 0) {
                std::uniform_int_distribution<int> par(space->variable_count(),
                                                       space->symbol_count() - 1);
                mono = mono * Polynomial::from_symbol(space, space->symbol(par(rng_)));
            }
            p += mono;
        }
        return p;
    }

    // Sum of per-DOF polynomials; no monomial mixes DOFs.
    Polynomial random_decoupled(const SpacePtr& space, int max_degree, int max_terms_per_dof,
                                bool with_params = true) {
        Polynomial p = Polynomial::zero(space);
        for (int dof = 1; dof <= space->dof_count(); ++dof) {
            p += random_poly(space, max_degree, max_terms_per_dof, with_params, dof);
        }
        return p;
    }

  private:
    std::mt19937 rng_;
};

}  // namespace nambu::testutil

#endif
