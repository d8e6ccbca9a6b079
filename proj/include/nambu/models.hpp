#ifndef NAMBU_MODELS_HPP
#define NAMBU_MODELS_HPP

#include <string>
#include <vector>

#include "nambu/bracket.hpp"

namespace nambu {

// Two coupled oscillators in the semiclassical closure: n = 2, variables
// (x1_a, x2_a, x3_a) = (<q_a>, <p_a>, <q_a^2>), parameters m1, m2, w1sq,
// w2sq, lambda. H carries the lambda*x1_1*x3_2 coupling; G is the decoupled
// sum of per-mode fluctuation constraints.
struct SemiclassicalModel {
    NambuSystem system;
    Symbol m1, m2, w1sq, w2sq, lambda;
};

SemiclassicalModel build_model();

struct ModelFact {
    std::string name;
    bool pass;
    std::string detail;  // empty when the fact holds
};

// Certifies the six structural facts of the model with exact symbolic
// equality: the equations of motion, both Poisson matrix sets, the
// fundamental-identity violation value, and the Jacobi residuals for both
// matrix sets. Failures come back as report entries, never exceptions.
std::vector<ModelFact> verify_model();

bool all_pass(const std::vector<ModelFact>& facts);

}  // namespace nambu

#endif
