#include "bh3/prover.hpp"

#include <algorithm>

#include "bh3/errors.hpp"

namespace bh3 {

namespace {

std::optional<Formula> first_compound(const FormulaSet& side) {
  for (const auto& f : side) {
    if (!f.is_atom()) return f;
  }
  return std::nullopt;
}

RuleId decomposition_rule(const Formula& f, Side side) {
  switch (f.op()) {
    case Connective::Not: return side == Side::Ant ? RuleId::NegL : RuleId::NegR;
    case Connective::And: return side == Side::Ant ? RuleId::AndL : RuleId::AndR;
    case Connective::Or: return side == Side::Ant ? RuleId::OrL : RuleId::OrR;
    case Connective::Imp: return side == Side::Ant ? RuleId::ImpL : RuleId::ImpR;
    default: throw PreconditionError("meaningful connectives have no sequent rules");
  }
}

// Ax on the shared atom, then WL then WR chains in canonical order.
ProofTree close_atomic(const Sequent& s, const Formula& shared) {
  ProofTree t{Sequent(FormulaSet{shared}, FormulaSet{shared}), RuleId::Ax,
              Principal{Side::Ant, shared}, {}};
  for (const auto& f : s.ant()) {
    if (f == shared) continue;
    Sequent next(t.conclusion.ant().with(f), t.conclusion.suc());
    t = ProofTree{std::move(next), RuleId::WL, Principal{Side::Ant, f}, {std::move(t)}};
  }
  for (const auto& f : s.suc()) {
    if (f == shared) continue;
    Sequent next(t.conclusion.ant(), t.conclusion.suc().with(f));
    t = ProofTree{std::move(next), RuleId::WR, Principal{Side::Suc, f}, {std::move(t)}};
  }
  return t;
}

ClassicalResult search(const Sequent& s, CalculusId fragment) {
  Side side = Side::Ant;
  std::optional<Formula> pick = first_compound(s.ant());
  if (!pick) {
    side = Side::Suc;
    pick = first_compound(s.suc());
  }
  if (pick) {
    const RuleId rule = decomposition_rule(*pick, side);
    const Principal principal{side, *pick};
    RuleApplication app = premises_for(s, rule, principal, fragment);
    if (!app.ok()) throw InternalError("backward step failed: " + app.detail);
    std::vector<ProofTree> kids;
    for (const Sequent& premise : app.premises) {
      ClassicalResult sub = search(premise, fragment);
      if (!sub.proved()) return sub;
      kids.push_back(std::move(*sub.proof));
    }
    return ClassicalResult{ProofTree{s, rule, principal, std::move(kids)}, std::nullopt};
  }
  // fully atomic
  for (const auto& f : s.ant()) {
    if (s.suc().contains(f)) {
      return ClassicalResult{close_atomic(s, f), std::nullopt};
    }
  }
  return ClassicalResult{std::nullopt, s};
}

void require_well_formed(const Sequent& s, const Signature& sig, const char* what) {
  if (!s.well_formed_for(sig)) {
    throw SignatureError(std::string(what) + " requires a sequent over " + sig.name() + ": " +
                             s.text(),
                         "");
  }
}

}  // namespace

ClassicalResult prove_classical(const Sequent& s, CalculusId fragment) {
  if (fragment != CalculusId::C && fragment != CalculusId::C1 && fragment != CalculusId::C2) {
    throw PreconditionError("prove_classical handles the fragments C, C1 and C2");
  }
  require_well_formed(s, calculus_signature(fragment), "classical search");
  return search(s, fragment);
}

Valuation countermodel_from_stuck(const Sequent& stuck,
                                  const std::set<std::string>& extra_atoms) {
  Valuation::Assignment assignment;
  for (const auto& atom : extra_atoms) assignment[atom] = TruthValue::Zero;
  for (const auto& f : stuck.suc()) assignment[f.atom_name()] = TruthValue::Zero;
  for (const auto& f : stuck.ant()) assignment[f.atom_name()] = TruthValue::One;
  return Valuation::classical(std::move(assignment));
}

namespace {

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

FormulaSet prune_antecedent(const FormulaSet& ant, const FormulaSet& suc) {
  if (suc.empty()) throw PreconditionError("prune_antecedent needs a nonempty succedent");
  const std::set<std::string> allowed = suc.vars();
  std::vector<Formula> kept;
  for (const auto& f : ant) {
    if (subset(f.vars(), allowed)) kept.push_back(f);
  }
  return FormulaSet(std::move(kept));
}

FormulaSet prune_succedent(const FormulaSet& ant, const FormulaSet& suc) {
  if (ant.empty()) throw PreconditionError("prune_succedent needs a nonempty antecedent");
  const std::set<std::string> allowed = ant.vars();
  std::vector<Formula> kept;
  for (const auto& f : suc) {
    if (subset(f.vars(), allowed)) kept.push_back(f);
  }
  return FormulaSet(std::move(kept));
}

namespace {

void collect_atoms(const ProofTree& t, std::set<std::string>& out) {
  for (const auto& f : t.conclusion.ant()) f.collect_vars(out);
  for (const auto& f : t.conclusion.suc()) f.collect_vars(out);
  for (const auto& premise : t.premises) collect_atoms(premise, out);
}

// The widening of Lemma "variablesincluidas": union the extra formulas into
// one side of every node, rebuild the leaves through weakening chains, and
// relabel the restricted negation rule. Weakenings that the union makes
// innocuous are dropped.
ProofTree widen(const ProofTree& node, const FormulaSet& extra, Side side) {
  if (node.rule == RuleId::Ax) {
    if (node.conclusion.ant().size() != 1 || !(node.conclusion.ant() == node.conclusion.suc())) {
      throw PreconditionError("widening expects axiom leaves of shape a => a");
    }
    const Formula alpha = *node.conclusion.ant().begin();
    ProofTree t{node.conclusion, RuleId::Ax, node.principal, {}};
    for (const auto& f : extra) {
      if (f == alpha) continue;
      Sequent next = side == Side::Suc
                         ? Sequent(t.conclusion.ant(), t.conclusion.suc().with(f))
                         : Sequent(t.conclusion.ant().with(f), t.conclusion.suc());
      t = ProofTree{std::move(next),
                    side == Side::Suc ? RuleId::WR : RuleId::WL,
                    Principal{side, f},
                    {std::move(t)}};
    }
    return t;
  }
  std::vector<ProofTree> kids;
  kids.reserve(node.premises.size());
  for (const auto& premise : node.premises) kids.push_back(widen(premise, extra, side));
  Sequent concl = side == Side::Suc
                      ? Sequent(node.conclusion.ant(), node.conclusion.suc().with_all(extra))
                      : Sequent(node.conclusion.ant().with_all(extra), node.conclusion.suc());
  if ((node.rule == RuleId::WR || node.rule == RuleId::WL) && kids[0].conclusion == concl) {
    return std::move(kids[0]);
  }
  RuleId rule = node.rule;
  if (side == Side::Suc && rule == RuleId::NegL) rule = RuleId::NegL_H;
  if (side == Side::Ant && rule == RuleId::NegR) rule = RuleId::NegR_B;
  return ProofTree{std::move(concl), rule, node.principal, std::move(kids)};
}

void require_atoms_covered(const ProofTree& t, const FormulaSet& extra, const char* what) {
  std::set<std::string> atoms;
  collect_atoms(t, atoms);
  if (!subset(atoms, extra.vars())) {
    throw PreconditionError(std::string(what) +
                            ": the proof mentions atoms outside the widening set");
  }
}

}  // namespace

ProofTree widen_succedent(const ProofTree& t, const FormulaSet& delta) {
  require_atoms_covered(t, delta, "widen_succedent");
  return widen(t, delta, Side::Suc);
}

ProofTree widen_antecedent(const ProofTree& t, const FormulaSet& gamma) {
  require_atoms_covered(t, gamma, "widen_antecedent");
  return widen(t, gamma, Side::Ant);
}

ProveResult prove(const Sequent& s, CalculusId calculus, std::size_t max_atoms) {
  if (calculus != CalculusId::H && calculus != CalculusId::B) {
    throw PreconditionError("prove handles the calculi H and B");
  }
  const bool for_h = calculus == CalculusId::H;
  require_well_formed(s, calculus_signature(calculus), for_h ? "prove (H)" : "prove (B)");

  ValidityResult validity = is_valid(s, for_h ? Logic::h3() : Logic::b3(), max_atoms);
  if (!validity.valid()) {
    return ProveResult{std::nullopt, std::move(validity.countermodel)};
  }

  // Validity forces the pivot side to be nonempty (an all-1/2 valuation
  // refutes any sequent with the other side missing).
  FormulaSet kept = for_h ? prune_antecedent(s.ant(), s.suc())
                          : prune_succedent(s.ant(), s.suc());
  auto core = for_h ? Sequent::try_make(kept, s.suc()) : Sequent::try_make(s.ant(), kept);
  if (!core) throw InternalError("pruned sequent lost both sides");

  ClassicalResult classical = prove_classical(*core, for_h ? CalculusId::C1 : CalculusId::C2);
  if (!classical.proved()) {
    throw InternalError("completeness violation: " + core->text() +
                        " is 3-valued-valid but classically unprovable");
  }

  ProofTree out = for_h ? widen_succedent(*classical.proof, s.suc())
                        : widen_antecedent(*classical.proof, s.ant());

  const FormulaSet& full = for_h ? s.ant() : s.suc();
  for (const auto& f : full) {
    if (kept.contains(f)) continue;
    Sequent next = for_h ? Sequent(out.conclusion.ant().with(f), out.conclusion.suc())
                         : Sequent(out.conclusion.ant(), out.conclusion.suc().with(f));
    out = ProofTree{std::move(next),
                    for_h ? RuleId::WL : RuleId::WR,
                    Principal{for_h ? Side::Ant : Side::Suc, f},
                    {std::move(out)}};
  }
  return ProveResult{std::move(out), std::nullopt};
}

}  // namespace bh3
