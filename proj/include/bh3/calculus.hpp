#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bh3/formula.hpp"
#include "bh3/sequent.hpp"

namespace bh3 {

/// C is the classical calculus over Sigma0; C1/C2 its {~,|} and {~,&}
/// fragments. H replaces NegL in C1 by the proviso rule NegL_H; B replaces
/// NegR in C2 by NegR_B.
enum class CalculusId { C, C1, C2, H, B };

const char* calculus_name(CalculusId id);
std::optional<CalculusId> calculus_from_name(std::string_view name);

/// Signature a calculus proves sequents over.
Signature calculus_signature(CalculusId id);

/// H and B additionally treat & and -> as abbreviations of their fragment
/// definitions, so their formula check only excludes #b/#h; C1/C2 are strict.
bool calculus_admits(CalculusId id, Connective c);

/// Primitive rules plus the derived-rule macros of H and B. Macros with an
/// extra proviso: AndL_H and ImpL_H require var({a1,a2}) <= var(suc),
/// OrR_B and ImpR_B require var({a1,a2}) <= var(ant). NegL_H requires
/// var(a) <= var(suc), NegR_B requires var(a) <= var(ant).
enum class RuleId {
  Ax,
  WL,
  WR,
  Cut,
  NegL,
  NegR,
  AndL,
  AndR,
  OrL,
  OrR,
  ImpL,
  ImpR,
  NegL_H,
  NegR_B,
  AndL_H,
  AndR_Hm,
  ImpL_H,
  ImpR_Hm,
  OrL_Bm,
  OrR_B,
  ImpL_Bm,
  ImpR_B,
};

const char* rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);
std::size_t rule_arity(RuleId id);  // Ax: 0; Cut/AndR/OrL/ImpL + macro twins: 2; rest: 1
bool rule_in_calculus(CalculusId calculus, RuleId rule);
bool is_macro_rule(RuleId id);

enum class Side { Ant, Suc };

/// The introduced / weakened / cut formula of a rule application, with the
/// side it acts on. Mandatory for every rule except Ax.
struct Principal {
  Side side;
  Formula formula;
  bool operator==(const Principal& other) const {
    return side == other.side && formula == other.formula;
  }
};

/// Rule-annotated derivation node; a proof is its root.
struct ProofTree {
  Sequent conclusion;
  RuleId rule;
  std::optional<Principal> principal;
  std::vector<ProofTree> premises;
};

enum class ApplyStatus { Ok, NotApplicable, ProvisoViolated, RuleNotInCalculus };

struct RuleApplication {
  ApplyStatus status = ApplyStatus::NotApplicable;
  std::vector<Sequent> premises;
  std::string detail;
  bool ok() const { return status == ApplyStatus::Ok; }
};

/// Reads `rule` bottom-up at `conclusion` with the given principal; set
/// semantics. By default the principal is removed from its side of the
/// conclusion and the subformulas are unioned into the premises. With
/// `retain_principal` the context keeps a copy of the principal, the other
/// legal way to match a schema against a set-sequent (weakening becomes a
/// no-op then). Provisos are evaluated on the conclusion and do not depend on
/// retention.
RuleApplication premises_for(const Sequent& conclusion, RuleId rule,
                             const std::optional<Principal>& principal, CalculusId calculus,
                             bool retain_principal = false);

enum class CheckErrorKind {
  ShapeMismatch,
  ProvisoViolated,
  SignatureViolation,
  CutForbidden,
  BadLeaf,
  RuleNotInCalculus,
};

const char* check_error_kind_name(CheckErrorKind kind);

struct CheckError {
  std::vector<std::size_t> path;  // premise indices from the root
  CheckErrorKind kind;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckError> errors;
  bool ok() const { return errors.empty(); }
  bool has(CheckErrorKind kind) const;
};

/// Checks every node: formulas well-formed for the calculus, rules admitted,
/// leaves are Ax instances a => a, and each node's premises are exactly the
/// schema instance determined by its rule and principal (consumed or
/// retained variant). With `require_cut_free`, any Cut node is an error.
CheckReport check_proof(const ProofTree& t, CalculusId calculus, bool require_cut_free = false);

bool is_cut_free(const ProofTree& t);

/// Replaces every macro step by its primitive derivation and expands all
/// formulas into the calculus's fragment (Sigma1 for H, Sigma2 for B).
/// The result contains only primitive rules, is cut-free when the input is,
/// and proves the expanded root. Identity for C/C1/C2.
///
/// Requires check_proof(t, calculus) to pass. Degenerate instances whose
/// expansion collides with ambient context formulas are rejected with Error.
ProofTree elaborate(const ProofTree& t, CalculusId calculus);

/// Human-readable indented rendering of a proof tree.
std::string proof_text(const ProofTree& t);

}  // namespace bh3
