#include "bh3/calculus.hpp"

#include <algorithm>

#include "bh3/errors.hpp"

namespace bh3 {

const char* calculus_name(CalculusId id) {
  switch (id) {
    case CalculusId::C: return "C";
    case CalculusId::C1: return "C1";
    case CalculusId::C2: return "C2";
    case CalculusId::H: return "H";
    case CalculusId::B: return "B";
  }
  return "?";
}

std::optional<CalculusId> calculus_from_name(std::string_view name) {
  if (name == "c" || name == "C") return CalculusId::C;
  if (name == "c1" || name == "C1") return CalculusId::C1;
  if (name == "c2" || name == "C2") return CalculusId::C2;
  if (name == "h" || name == "H") return CalculusId::H;
  if (name == "b" || name == "B") return CalculusId::B;
  return std::nullopt;
}

Signature calculus_signature(CalculusId id) {
  switch (id) {
    case CalculusId::C: return Signature::sigma0();
    case CalculusId::C1: return Signature::sigma1();
    case CalculusId::C2: return Signature::sigma2();
    case CalculusId::H: return Signature::sigma1();
    case CalculusId::B: return Signature::sigma2();
  }
  return Signature::sigma0();
}

bool calculus_admits(CalculusId id, Connective c) {
  switch (id) {
    case CalculusId::C1:
      return c == Connective::Not || c == Connective::Or;
    case CalculusId::C2:
      return c == Connective::Not || c == Connective::And;
    case CalculusId::C:
    case CalculusId::H:
    case CalculusId::B:
      // H and B identify & and -> with their fragment abbreviations, so only
      // the meaningful connectives are outside the language.
      return c != Connective::SharpB && c != Connective::SharpH;
  }
  return false;
}

const char* rule_name(RuleId id) {
  switch (id) {
    case RuleId::Ax: return "Ax";
    case RuleId::WL: return "WL";
    case RuleId::WR: return "WR";
    case RuleId::Cut: return "Cut";
    case RuleId::NegL: return "NegL";
    case RuleId::NegR: return "NegR";
    case RuleId::AndL: return "AndL";
    case RuleId::AndR: return "AndR";
    case RuleId::OrL: return "OrL";
    case RuleId::OrR: return "OrR";
    case RuleId::ImpL: return "ImpL";
    case RuleId::ImpR: return "ImpR";
    case RuleId::NegL_H: return "NegL_H";
    case RuleId::NegR_B: return "NegR_B";
    case RuleId::AndL_H: return "AndL_H";
    case RuleId::AndR_Hm: return "AndR_Hm";
    case RuleId::ImpL_H: return "ImpL_H";
    case RuleId::ImpR_Hm: return "ImpR_Hm";
    case RuleId::OrL_Bm: return "OrL_Bm";
    case RuleId::OrR_B: return "OrR_B";
    case RuleId::ImpL_Bm: return "ImpL_Bm";
    case RuleId::ImpR_B: return "ImpR_B";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  static const std::pair<std::string_view, RuleId> table[] = {
      {"Ax", RuleId::Ax},           {"WL", RuleId::WL},
      {"WR", RuleId::WR},           {"Cut", RuleId::Cut},
      {"NegL", RuleId::NegL},       {"NegR", RuleId::NegR},
      {"AndL", RuleId::AndL},       {"AndR", RuleId::AndR},
      {"OrL", RuleId::OrL},         {"OrR", RuleId::OrR},
      {"ImpL", RuleId::ImpL},       {"ImpR", RuleId::ImpR},
      {"NegL_H", RuleId::NegL_H},   {"NegR_B", RuleId::NegR_B},
      {"AndL_H", RuleId::AndL_H},   {"AndR_Hm", RuleId::AndR_Hm},
      {"ImpL_H", RuleId::ImpL_H},   {"ImpR_Hm", RuleId::ImpR_Hm},
      {"OrL_Bm", RuleId::OrL_Bm},   {"OrR_B", RuleId::OrR_B},
      {"ImpL_Bm", RuleId::ImpL_Bm}, {"ImpR_B", RuleId::ImpR_B},
  };
  for (const auto& [n, id] : table) {
    if (n == name) return id;
  }
  return std::nullopt;
}

std::size_t rule_arity(RuleId id) {
  switch (id) {
    case RuleId::Ax:
      return 0;
    case RuleId::Cut:
    case RuleId::AndR:
    case RuleId::OrL:
    case RuleId::ImpL:
    case RuleId::AndR_Hm:
    case RuleId::ImpL_H:
    case RuleId::OrL_Bm:
    case RuleId::ImpL_Bm:
      return 2;
    default:
      return 1;
  }
}

bool rule_in_calculus(CalculusId calculus, RuleId rule) {
  switch (rule) {
    case RuleId::Ax:
    case RuleId::WL:
    case RuleId::WR:
    case RuleId::Cut:
      return true;
    case RuleId::NegL:
      return calculus != CalculusId::H;
    case RuleId::NegR:
      return calculus != CalculusId::B;
    case RuleId::AndL:
    case RuleId::AndR:
      return calculus == CalculusId::C || calculus == CalculusId::C2 || calculus == CalculusId::B;
    case RuleId::OrL:
    case RuleId::OrR:
      return calculus == CalculusId::C || calculus == CalculusId::C1 || calculus == CalculusId::H;
    case RuleId::ImpL:
    case RuleId::ImpR:
      return calculus == CalculusId::C;
    case RuleId::NegL_H:
    case RuleId::AndL_H:
    case RuleId::AndR_Hm:
    case RuleId::ImpL_H:
    case RuleId::ImpR_Hm:
      return calculus == CalculusId::H;
    case RuleId::NegR_B:
    case RuleId::OrL_Bm:
    case RuleId::OrR_B:
    case RuleId::ImpL_Bm:
    case RuleId::ImpR_B:
      return calculus == CalculusId::B;
  }
  return false;
}

bool is_macro_rule(RuleId id) {
  switch (id) {
    case RuleId::AndL_H:
    case RuleId::AndR_Hm:
    case RuleId::ImpL_H:
    case RuleId::ImpR_Hm:
    case RuleId::OrL_Bm:
    case RuleId::OrR_B:
    case RuleId::ImpL_Bm:
    case RuleId::ImpR_B:
      return true;
    default:
      return false;
  }
}

namespace {

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RuleApplication not_applicable(std::string detail) {
  return RuleApplication{ApplyStatus::NotApplicable, {}, std::move(detail)};
}

RuleApplication proviso_violated(std::string detail) {
  return RuleApplication{ApplyStatus::ProvisoViolated, {}, std::move(detail)};
}

RuleApplication premises(std::vector<std::optional<Sequent>> candidates) {
  RuleApplication out;
  for (auto& c : candidates) {
    if (!c) return not_applicable("a premise would have both sides empty");
    out.premises.push_back(std::move(*c));
  }
  out.status = ApplyStatus::Ok;
  return out;
}

struct RuleShape {
  Side side;
  Connective op;   // principal's top connective; Not used as "any" marker
  bool any_shape;  // WL/WR/Cut: principal may be any formula
  bool proviso_on_suc;
  bool proviso_on_ant;
  bool pair_proviso;  // proviso covers both immediate subformulas
};

RuleShape shape_of(RuleId rule) {
  switch (rule) {
    case RuleId::WL: return {Side::Ant, Connective::Not, true, false, false, false};
    case RuleId::WR: return {Side::Suc, Connective::Not, true, false, false, false};
    case RuleId::Cut: return {Side::Ant, Connective::Not, true, false, false, false};
    case RuleId::NegL: return {Side::Ant, Connective::Not, false, false, false, false};
    case RuleId::NegL_H: return {Side::Ant, Connective::Not, false, true, false, false};
    case RuleId::NegR: return {Side::Suc, Connective::Not, false, false, false, false};
    case RuleId::NegR_B: return {Side::Suc, Connective::Not, false, false, true, false};
    case RuleId::AndL: return {Side::Ant, Connective::And, false, false, false, false};
    case RuleId::AndL_H: return {Side::Ant, Connective::And, false, true, false, true};
    case RuleId::AndR: return {Side::Suc, Connective::And, false, false, false, false};
    case RuleId::AndR_Hm: return {Side::Suc, Connective::And, false, false, false, false};
    case RuleId::OrL: return {Side::Ant, Connective::Or, false, false, false, false};
    case RuleId::OrL_Bm: return {Side::Ant, Connective::Or, false, false, false, false};
    case RuleId::OrR: return {Side::Suc, Connective::Or, false, false, false, false};
    case RuleId::OrR_B: return {Side::Suc, Connective::Or, false, false, true, true};
    case RuleId::ImpL: return {Side::Ant, Connective::Imp, false, false, false, false};
    case RuleId::ImpL_H: return {Side::Ant, Connective::Imp, false, true, false, true};
    case RuleId::ImpL_Bm: return {Side::Ant, Connective::Imp, false, false, false, false};
    case RuleId::ImpR: return {Side::Suc, Connective::Imp, false, false, false, false};
    case RuleId::ImpR_Hm: return {Side::Suc, Connective::Imp, false, false, false, false};
    case RuleId::ImpR_B: return {Side::Suc, Connective::Imp, false, false, true, true};
    default: return {Side::Ant, Connective::Not, true, false, false, false};
  }
}

}  // namespace

RuleApplication premises_for(const Sequent& conclusion, RuleId rule,
                             const std::optional<Principal>& principal, CalculusId calculus,
                             bool retain_principal) {
  if (!rule_in_calculus(calculus, rule)) {
    return RuleApplication{ApplyStatus::RuleNotInCalculus, {},
                           std::string("rule ") + rule_name(rule) + " is not part of calculus " +
                               calculus_name(calculus)};
  }

  if (rule == RuleId::Ax) {
    if (conclusion.ant().size() != 1 || conclusion.suc().size() != 1 ||
        !(*conclusion.ant().begin() == *conclusion.suc().begin())) {
      return not_applicable("Ax concludes a sequent of shape a => a");
    }
    if (principal && !(principal->formula == *conclusion.ant().begin())) {
      return not_applicable("Ax principal must be the axiom formula");
    }
    return RuleApplication{ApplyStatus::Ok, {}, ""};
  }

  if (!principal) return not_applicable("rule requires a principal formula annotation");
  const Formula& f = principal->formula;
  const FormulaSet& ant = conclusion.ant();
  const FormulaSet& suc = conclusion.suc();

  if (rule == RuleId::Cut) {
    return premises({Sequent::try_make(ant, suc.with(f)), Sequent::try_make(ant.with(f), suc)});
  }

  const RuleShape shape = shape_of(rule);
  if (principal->side != shape.side) {
    return not_applicable(std::string("rule ") + rule_name(rule) + " acts on the " +
                          (shape.side == Side::Ant ? "antecedent" : "succedent"));
  }
  const FormulaSet& own = shape.side == Side::Ant ? ant : suc;
  if (!own.contains(f)) {
    return not_applicable("principal '" + f.text() + "' does not occur in the conclusion");
  }
  if (!shape.any_shape &&
      !(f.kind() != FormulaKind::Atom && f.op() == shape.op &&
        (shape.op == Connective::Not ? f.kind() == FormulaKind::Unary
                                     : f.kind() == FormulaKind::Binary))) {
    return not_applicable(std::string("principal of ") + rule_name(rule) + " must be a '" +
                          connective_symbol(shape.op) + "' formula");
  }

  if (shape.proviso_on_suc || shape.proviso_on_ant) {
    std::set<std::string> needed;
    if (shape.pair_proviso) {
      f.left().collect_vars(needed);
      f.right().collect_vars(needed);
    } else {
      // NegL_H / NegR_B: var(a) for principal ~a
      f.child().collect_vars(needed);
    }
    const FormulaSet& context = shape.proviso_on_suc ? suc : ant;
    if (!subset(needed, context.vars())) {
      return proviso_violated(std::string("proviso of ") + rule_name(rule) + " fails: var(" +
                              (shape.pair_proviso ? "{a1, a2}" : f.child().text()) +
                              ") is not contained in var(" +
                              (shape.proviso_on_suc ? "suc" : "ant") + ")");
    }
  }

  // Reading bottom-up, the principal leaves its side unless retained and the
  // subformulas join the premises.
  const FormulaSet base_ant = (shape.side == Side::Ant && !retain_principal) ? ant.without(f) : ant;
  const FormulaSet base_suc = (shape.side == Side::Suc && !retain_principal) ? suc.without(f) : suc;

  switch (rule) {
    case RuleId::WL:
    case RuleId::WR:
      return premises({Sequent::try_make(base_ant, base_suc)});
    case RuleId::NegL:
    case RuleId::NegL_H:
      return premises({Sequent::try_make(base_ant, base_suc.with(f.child()))});
    case RuleId::NegR:
    case RuleId::NegR_B:
      return premises({Sequent::try_make(base_ant.with(f.child()), base_suc)});
    case RuleId::AndL:
    case RuleId::AndL_H:
      return premises({Sequent::try_make(base_ant.with(f.left()).with(f.right()), base_suc)});
    case RuleId::AndR:
    case RuleId::AndR_Hm:
      return premises({Sequent::try_make(base_ant, base_suc.with(f.left())),
                       Sequent::try_make(base_ant, base_suc.with(f.right()))});
    case RuleId::OrL:
    case RuleId::OrL_Bm:
      return premises({Sequent::try_make(base_ant.with(f.left()), base_suc),
                       Sequent::try_make(base_ant.with(f.right()), base_suc)});
    case RuleId::OrR:
    case RuleId::OrR_B:
      return premises({Sequent::try_make(base_ant, base_suc.with(f.left()).with(f.right()))});
    case RuleId::ImpL:
    case RuleId::ImpL_H:
    case RuleId::ImpL_Bm:
      return premises({Sequent::try_make(base_ant, base_suc.with(f.left())),
                       Sequent::try_make(base_ant.with(f.right()), base_suc)});
    case RuleId::ImpR:
    case RuleId::ImpR_Hm:
    case RuleId::ImpR_B:
      return premises({Sequent::try_make(base_ant.with(f.left()), base_suc.with(f.right()))});
    default:
      return not_applicable("unhandled rule");
  }
}

const char* check_error_kind_name(CheckErrorKind kind) {
  switch (kind) {
    case CheckErrorKind::ShapeMismatch: return "shape-mismatch";
    case CheckErrorKind::ProvisoViolated: return "proviso-violated";
    case CheckErrorKind::SignatureViolation: return "signature-violation";
    case CheckErrorKind::CutForbidden: return "cut-forbidden";
    case CheckErrorKind::BadLeaf: return "bad-leaf";
    case CheckErrorKind::RuleNotInCalculus: return "rule-not-in-calculus";
  }
  return "?";
}

bool CheckReport::has(CheckErrorKind kind) const {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const CheckError& e) { return e.kind == kind; });
}

namespace {

void check_signature(const Formula& f, CalculusId calculus, const std::vector<std::size_t>& path,
                     CheckReport& report) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return;
    case FormulaKind::Unary:
    case FormulaKind::Binary:
      if (!calculus_admits(calculus, f.op())) {
        report.errors.push_back(
            {path, CheckErrorKind::SignatureViolation,
             std::string("connective '") + connective_symbol(f.op()) + "' in '" + f.text() +
                 "' is outside the language of " + calculus_name(calculus)});
        return;  // one report per formula is enough
      }
      if (f.kind() == FormulaKind::Unary) {
        check_signature(f.child(), calculus, path, report);
      } else {
        check_signature(f.left(), calculus, path, report);
        check_signature(f.right(), calculus, path, report);
      }
      return;
  }
}

bool premises_match(const std::vector<Sequent>& expected, const std::vector<ProofTree>& actual) {
  if (expected.size() != actual.size()) return false;
  for (std::size_t i = 0; i < expected.size(); i++) {
    if (!(expected[i] == actual[i].conclusion)) return false;
  }
  return true;
}

void check_node(const ProofTree& node, CalculusId calculus, bool require_cut_free,
                std::vector<std::size_t>& path, CheckReport& report) {
  for (const auto& f : node.conclusion.ant()) check_signature(f, calculus, path, report);
  for (const auto& f : node.conclusion.suc()) check_signature(f, calculus, path, report);
  if (node.principal) check_signature(node.principal->formula, calculus, path, report);

  if (!rule_in_calculus(calculus, node.rule)) {
    report.errors.push_back({path, CheckErrorKind::RuleNotInCalculus,
                             std::string("rule ") + rule_name(node.rule) +
                                 " is not part of calculus " + calculus_name(calculus)});
  } else if (node.rule == RuleId::Ax) {
    if (!node.premises.empty()) {
      report.errors.push_back({path, CheckErrorKind::ShapeMismatch, "Ax has no premises"});
    }
    RuleApplication app = premises_for(node.conclusion, RuleId::Ax, node.principal, calculus);
    if (!app.ok()) {
      report.errors.push_back({path, CheckErrorKind::BadLeaf,
                               "leaf is not an axiom instance: " + node.conclusion.text()});
    }
  } else if (node.premises.empty()) {
    report.errors.push_back({path, CheckErrorKind::BadLeaf,
                             std::string("leaf carries rule ") + rule_name(node.rule) +
                                 "; leaves must be Ax instances"});
  } else if (node.premises.size() != rule_arity(node.rule)) {
    report.errors.push_back({path, CheckErrorKind::ShapeMismatch,
                             std::string("rule ") + rule_name(node.rule) + " expects " +
                                 std::to_string(rule_arity(node.rule)) + " premise(s), found " +
                                 std::to_string(node.premises.size())});
  } else {
    // A schema instance may consume the principal from the conclusion or keep
    // a copy in the context; accept either reading.
    RuleApplication consumed =
        premises_for(node.conclusion, node.rule, node.principal, calculus, false);
    bool matched = consumed.ok() && premises_match(consumed.premises, node.premises);
    if (!matched && consumed.ok()) {
      RuleApplication retained =
          premises_for(node.conclusion, node.rule, node.principal, calculus, true);
      matched = retained.ok() && premises_match(retained.premises, node.premises);
    }
    if (!matched) {
      if (consumed.status == ApplyStatus::ProvisoViolated) {
        report.errors.push_back({path, CheckErrorKind::ProvisoViolated, consumed.detail});
      } else if (!consumed.ok()) {
        report.errors.push_back({path, CheckErrorKind::ShapeMismatch, consumed.detail});
      } else {
        report.errors.push_back({path, CheckErrorKind::ShapeMismatch,
                                 std::string("premises do not match rule ") +
                                     rule_name(node.rule) + " applied to " +
                                     node.conclusion.text()});
      }
    }
  }

  if (require_cut_free && node.rule == RuleId::Cut) {
    report.errors.push_back(
        {path, CheckErrorKind::CutForbidden, "Cut occurs in a cut-free check"});
  }

  for (std::size_t i = 0; i < node.premises.size(); i++) {
    path.push_back(i);
    check_node(node.premises[i], calculus, require_cut_free, path, report);
    path.pop_back();
  }
}

}  // namespace

CheckReport check_proof(const ProofTree& t, CalculusId calculus, bool require_cut_free) {
  CheckReport report;
  std::vector<std::size_t> path;
  check_node(t, calculus, require_cut_free, path, report);
  return report;
}

bool is_cut_free(const ProofTree& t) {
  if (t.rule == RuleId::Cut) return false;
  return std::all_of(t.premises.begin(), t.premises.end(),
                     [](const ProofTree& p) { return is_cut_free(p); });
}

namespace {

void render_node(const ProofTree& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += node.conclusion.text();
  out += "   [";
  out += rule_name(node.rule);
  if (node.principal) {
    out += node.principal->side == Side::Ant ? " ant " : " suc ";
    out += node.principal->formula.text();
  }
  out += "]\n";
  for (const auto& premise : node.premises) render_node(premise, depth + 1, out);
}

}  // namespace

std::string proof_text(const ProofTree& t) {
  std::string out;
  render_node(t, 0, out);
  return out;
}

}  // namespace bh3
