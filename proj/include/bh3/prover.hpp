#pragma once

#include <optional>

#include "bh3/calculus.hpp"
#include "bh3/semantics.hpp"
#include "bh3/sequent.hpp"

namespace bh3 {

/// Outcome of classical backward search. On failure `stuck` is the fully
/// atomic sequent with no shared atom that witnesses underivability; a
/// classical countermodel reads off it (antecedent atoms true, succedent
/// atoms false).
struct ClassicalResult {
  std::optional<ProofTree> proof;
  std::optional<Sequent> stuck;
  bool proved() const { return proof.has_value(); }
};

/// Cut-free backward proof search in C, C1 or C2. Deterministic: the
/// decomposed formula is the canonically smallest non-atomic one, antecedent
/// first; atomic sequents close on the smallest shared atom via Ax plus
/// WL/WR chains. Succeeds exactly on CPL-valid sequents.
ClassicalResult prove_classical(const Sequent& s, CalculusId fragment);

/// Classical countermodel read off a stuck atomic sequent, extended with
/// Zero for `extra_atoms` not mentioned in it.
Valuation countermodel_from_stuck(const Sequent& stuck, const std::set<std::string>& extra_atoms);

/// Keeps the antecedent formulas whose variables are contained in var(suc).
/// `suc` must be nonempty.
FormulaSet prune_antecedent(const FormulaSet& ant, const FormulaSet& suc);

/// Dual: keeps succedent formulas with variables inside var(ant); `ant`
/// nonempty.
FormulaSet prune_succedent(const FormulaSet& ant, const FormulaSet& suc);

/// Unions `delta` into every succedent of a cut-free C1 proof, turns each
/// leaf a => a into Ax followed by WR steps up to a => a, delta, relabels
/// NegL to NegL_H and drops weakenings made innocuous by the union. Every
/// atom occurring in `t` must lie in var(delta); the result checks under H.
ProofTree widen_succedent(const ProofTree& t, const FormulaSet& delta);

/// Dual for B: unions `gamma` into antecedents of a cut-free C2 proof,
/// patches leaves with WL chains and relabels NegR to NegR_B.
ProofTree widen_antecedent(const ProofTree& t, const FormulaSet& gamma);

struct ProveResult {
  std::optional<ProofTree> proof;
  std::optional<Countermodel> countermodel;
  bool proved() const { return proof.has_value(); }
};

/// Decision procedure for H and B driven by the completeness construction:
/// check 3-valued validity by brute force; on failure return that
/// countermodel, otherwise prune the variable-foreign side formulas, prove
/// the pruned sequent classically in the fragment, widen the proof back, and
/// reinstate the pruned formulas by weakenings. The sequent must be
/// well-formed over Sigma1 (H) or Sigma2 (B); emitted proofs are cut-free
/// and check under the calculus.
ProveResult prove(const Sequent& s, CalculusId calculus,
                  std::size_t max_atoms = kDefaultMaxAtoms);

}  // namespace bh3
