#pragma once

#include <string>

#include "bh3/calculus.hpp"
#include "bh3/sequent.hpp"

namespace bh3 {

std::string latex_formula(const Formula& f);
std::string latex_sequent(const Sequent& s);

/// Nested inference-rule display of a derivation, one \dfrac per node with
/// the rule label to the right.
std::string latex_proof(const ProofTree& t);

}  // namespace bh3
