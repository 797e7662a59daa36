#include <optional>
#include <vector>

#include "bh3/calculus.hpp"
#include "bh3/errors.hpp"

namespace bh3 {

namespace {

struct Step {
  RuleId rule;
  Principal pr;
};

// Applies `steps` top-down from `conclusion` so that the last premise equals
// target.conclusion, choosing per step between the consumed instance, the
// retained instance, and dropping the step (set collapse can make a step
// redundant, e.g. the bridging weakening of an already-present formula or the
// second negation step when the two subformulas coincide). A step whose
// premise equals its conclusion is dropped as a no-op.
std::optional<ProofTree> chain_to(const Sequent& conclusion, const std::vector<Step>& steps,
                                  std::size_t i, const ProofTree& target, CalculusId cal) {
  if (i == steps.size()) {
    if (conclusion == target.conclusion) return target;
    return std::nullopt;
  }
  for (bool retain : {false, true}) {
    RuleApplication app = premises_for(conclusion, steps[i].rule, steps[i].pr, cal, retain);
    if (!app.ok() || app.premises.size() != 1) continue;
    const Sequent& premise = app.premises[0];
    if (premise == conclusion) {
      if (auto rest = chain_to(premise, steps, i + 1, target, cal)) return rest;
      continue;
    }
    if (auto rest = chain_to(premise, steps, i + 1, target, cal)) {
      return ProofTree{conclusion, steps[i].rule, steps[i].pr, {std::move(*rest)}};
    }
  }
  return chain_to(conclusion, steps, i + 1, target, cal);
}

ProofTree require_chain(const Sequent& conclusion, const std::vector<Step>& steps,
                        const ProofTree& target, CalculusId cal, const char* macro) {
  if (auto t = chain_to(conclusion, steps, 0, target, cal)) return std::move(*t);
  throw Error(std::string("cannot elaborate ") + macro + " at '" + conclusion.text() +
              "': the displayed derivation collides with the ambient context");
}

Sequent expand_sequent(const Sequent& s, const Signature& target) {
  std::vector<Formula> ant, suc;
  for (const auto& f : s.ant()) ant.push_back(expand_to(f, target));
  for (const auto& f : s.suc()) suc.push_back(expand_to(f, target));
  return Sequent(FormulaSet(std::move(ant)), FormulaSet(std::move(suc)));
}

bool conclusions_match(const std::vector<Sequent>& expected, const std::vector<ProofTree>& got) {
  if (expected.size() != got.size()) return false;
  for (std::size_t i = 0; i < expected.size(); i++) {
    if (!(expected[i] == got[i].conclusion)) return false;
  }
  return true;
}

// conj / imp macros on the left or right; the chains below are the paper's
// displayed derivations with weakenings inserted where the expanded principal
// has to be carried through a branch.
ProofTree elaborate_macro(const Sequent& concl, RuleId rule, const Formula& original_principal,
                          std::vector<ProofTree> kids, CalculusId cal, const Signature& target) {
  const Formula a1 = expand_to(original_principal.left(), target);
  const Formula a2 = expand_to(original_principal.right(), target);
  const Formula na1 = Formula::negation(a1);
  const Formula na2 = Formula::negation(a2);

  switch (rule) {
    case RuleId::AndL_H: {
      // a1&a2, G => D  ~~>  ~(~a1|~a2), G => D   via  =>~ , =>| , ~H=>
      const Formula psi = Formula::disjunction(na1, na2);
      const Formula phi = Formula::negation(psi);
      std::vector<Step> steps{{RuleId::NegL_H, {Side::Ant, phi}}, {RuleId::OrR, {Side::Suc, psi}},
                              {RuleId::NegR, {Side::Suc, na1}}};
      if (!(a1 == a2)) steps.push_back({RuleId::NegR, {Side::Suc, na2}});
      return require_chain(concl, steps, kids[0], cal, "AndL_H");
    }
    case RuleId::OrR_B: {
      // G => D, a1|a2  ~~>  G => D, ~(~a1&~a2)   via  ~B=> dual chain
      const Formula psi = Formula::conjunction(na1, na2);
      const Formula phi = Formula::negation(psi);
      std::vector<Step> steps{{RuleId::NegR_B, {Side::Suc, phi}}, {RuleId::AndL, {Side::Ant, psi}},
                              {RuleId::NegL, {Side::Ant, na1}}};
      if (!(a1 == a2)) steps.push_back({RuleId::NegL, {Side::Ant, na2}});
      return require_chain(concl, steps, kids[0], cal, "OrR_B");
    }
    case RuleId::ImpR_Hm: {
      // G => D, a1->a2 reads ~a1|a2
      const Formula phi = Formula::disjunction(na1, a2);
      std::vector<Step> steps{{RuleId::OrR, {Side::Suc, phi}}, {RuleId::NegR, {Side::Suc, na1}}};
      return require_chain(concl, steps, kids[0], cal, "ImpR_Hm");
    }
    case RuleId::ImpR_B: {
      // G => D, a1->a2 reads ~(a1 & ~a2)
      const Formula psi = Formula::conjunction(a1, na2);
      const Formula phi = Formula::negation(psi);
      std::vector<Step> steps{{RuleId::NegR_B, {Side::Suc, phi}}, {RuleId::AndL, {Side::Ant, psi}},
                              {RuleId::NegL, {Side::Ant, na2}}};
      return require_chain(concl, steps, kids[0], cal, "ImpR_B");
    }
    case RuleId::ImpL_H: {
      // a1->a2, G => D reads ~a1|a2; left branch closes by ~H=> under the
      // macro proviso.
      const Formula phi = Formula::disjunction(na1, a2);
      for (bool retain : {false, true}) {
        RuleApplication split = premises_for(concl, RuleId::OrL, Principal{Side::Ant, phi}, cal,
                                             retain);
        if (!split.ok()) continue;
        auto left = chain_to(split.premises[0], {{RuleId::NegL_H, {Side::Ant, na1}}}, 0, kids[0],
                             cal);
        auto right = chain_to(split.premises[1], {{RuleId::WL, {Side::Ant, phi}}}, 0, kids[1], cal);
        if (left && right) {
          return ProofTree{concl, RuleId::OrL, Principal{Side::Ant, phi},
                           {std::move(*left), std::move(*right)}};
        }
      }
      throw Error("cannot elaborate ImpL_H at '" + concl.text() + "'");
    }
    case RuleId::AndR_Hm: {
      // G => D, a1&a2: keep ~(~a1|~a2) in the succedent, split on ~a1|~a2 and
      // close each branch by ~H=> over a weakening (the proviso holds because
      // the kept formula carries every variable of a1 and a2).
      const Formula psi = Formula::disjunction(na1, na2);
      const Formula phi = Formula::negation(psi);
      for (bool retain_root : {true, false}) {
        RuleApplication root =
            premises_for(concl, RuleId::NegR, Principal{Side::Suc, phi}, cal, retain_root);
        if (!root.ok()) continue;
        for (bool retain_split : {false, true}) {
          RuleApplication split = premises_for(root.premises[0], RuleId::OrL,
                                               Principal{Side::Ant, psi}, cal, retain_split);
          if (!split.ok()) continue;
          auto b1 = chain_to(split.premises[0],
                             {{RuleId::NegL_H, {Side::Ant, na1}}, {RuleId::WR, {Side::Suc, phi}}},
                             0, kids[0], cal);
          auto b2 = chain_to(split.premises[1],
                             {{RuleId::NegL_H, {Side::Ant, na2}}, {RuleId::WR, {Side::Suc, phi}}},
                             0, kids[1], cal);
          if (b1 && b2) {
            ProofTree orl{root.premises[0], RuleId::OrL, Principal{Side::Ant, psi},
                          {std::move(*b1), std::move(*b2)}};
            return ProofTree{concl, RuleId::NegR, Principal{Side::Suc, phi}, {std::move(orl)}};
          }
        }
      }
      throw Error("cannot elaborate AndR_Hm at '" + concl.text() + "'");
    }
    case RuleId::OrL_Bm: {
      // a1|a2, G => D: dual of AndR_Hm with ~(~a1&~a2) kept in the antecedent.
      const Formula psi = Formula::conjunction(na1, na2);
      const Formula phi = Formula::negation(psi);
      for (bool retain_root : {true, false}) {
        RuleApplication root =
            premises_for(concl, RuleId::NegL, Principal{Side::Ant, phi}, cal, retain_root);
        if (!root.ok()) continue;
        for (bool retain_split : {false, true}) {
          RuleApplication split = premises_for(root.premises[0], RuleId::AndR,
                                               Principal{Side::Suc, psi}, cal, retain_split);
          if (!split.ok()) continue;
          auto b1 = chain_to(split.premises[0],
                             {{RuleId::NegR_B, {Side::Suc, na1}}, {RuleId::WL, {Side::Ant, phi}}},
                             0, kids[0], cal);
          auto b2 = chain_to(split.premises[1],
                             {{RuleId::NegR_B, {Side::Suc, na2}}, {RuleId::WL, {Side::Ant, phi}}},
                             0, kids[1], cal);
          if (b1 && b2) {
            ProofTree andr{root.premises[0], RuleId::AndR, Principal{Side::Suc, psi},
                           {std::move(*b1), std::move(*b2)}};
            return ProofTree{concl, RuleId::NegL, Principal{Side::Ant, phi}, {std::move(andr)}};
          }
        }
      }
      throw Error("cannot elaborate OrL_Bm at '" + concl.text() + "'");
    }
    case RuleId::ImpL_Bm: {
      // a1->a2, G => D reads ~(a1 & ~a2); NegR_B in the right branch is fed
      // by the kept principal, so no proviso is needed on the macro.
      const Formula psi = Formula::conjunction(a1, na2);
      const Formula phi = Formula::negation(psi);
      for (bool retain_root : {true, false}) {
        RuleApplication root =
            premises_for(concl, RuleId::NegL, Principal{Side::Ant, phi}, cal, retain_root);
        if (!root.ok()) continue;
        for (bool retain_split : {false, true}) {
          RuleApplication split = premises_for(root.premises[0], RuleId::AndR,
                                               Principal{Side::Suc, psi}, cal, retain_split);
          if (!split.ok()) continue;
          auto b1 = chain_to(split.premises[0], {{RuleId::WL, {Side::Ant, phi}}}, 0, kids[0], cal);
          auto b2 = chain_to(split.premises[1],
                             {{RuleId::NegR_B, {Side::Suc, na2}}, {RuleId::WL, {Side::Ant, phi}}},
                             0, kids[1], cal);
          if (b1 && b2) {
            ProofTree andr{root.premises[0], RuleId::AndR, Principal{Side::Suc, psi},
                           {std::move(*b1), std::move(*b2)}};
            return ProofTree{concl, RuleId::NegL, Principal{Side::Ant, phi}, {std::move(andr)}};
          }
        }
      }
      throw Error("cannot elaborate ImpL_Bm at '" + concl.text() + "'");
    }
    default:
      throw Error("not a macro rule");
  }
}

ProofTree elaborate_node(const ProofTree& node, CalculusId cal, const Signature& target) {
  std::vector<ProofTree> kids;
  kids.reserve(node.premises.size());
  for (const auto& premise : node.premises) kids.push_back(elaborate_node(premise, cal, target));

  const Sequent concl = expand_sequent(node.conclusion, target);

  if (is_macro_rule(node.rule)) {
    return elaborate_macro(concl, node.rule, node.principal->formula, std::move(kids), cal,
                           target);
  }

  std::optional<Principal> principal;
  if (node.principal) {
    principal = Principal{node.principal->side, expand_to(node.principal->formula, target)};
  }

  // Expansion can merge formulas that were distinct, making a weakening a
  // no-op; splice those out.
  if ((node.rule == RuleId::WL || node.rule == RuleId::WR) && kids[0].conclusion == concl) {
    return std::move(kids[0]);
  }

  for (bool retain : {false, true}) {
    RuleApplication app = premises_for(concl, node.rule, principal, cal, retain);
    if (app.ok() && conclusions_match(app.premises, kids)) {
      return ProofTree{concl, node.rule, principal, std::move(kids)};
    }
  }
  throw Error(std::string("cannot elaborate ") + rule_name(node.rule) + " step at '" +
              concl.text() + "': expansion collides with the ambient context");
}

}  // namespace

ProofTree elaborate(const ProofTree& t, CalculusId calculus) {
  if (calculus != CalculusId::H && calculus != CalculusId::B) return t;
  CheckReport pre = check_proof(t, calculus);
  if (!pre.ok()) {
    throw PreconditionError(std::string("elaborate requires a proof accepted by check_proof for ") +
                            calculus_name(calculus));
  }
  const Signature target =
      calculus == CalculusId::H ? Signature::sigma1() : Signature::sigma2();
  return elaborate_node(t, calculus, target);
}

}  // namespace bh3
