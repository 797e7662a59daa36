#include "bh3/latex.hpp"

namespace bh3 {

namespace {

const char* latex_connective(Connective c) {
  switch (c) {
    case Connective::Not: return "\\lnot ";
    case Connective::And: return "\\wedge";
    case Connective::Or: return "\\vee";
    case Connective::Imp: return "\\to";
    case Connective::SharpB: return "\\#_{B} ";
    case Connective::SharpH: return "\\#_{H} ";
  }
  return "?";
}

int binary_precedence(Connective op) {
  switch (op) {
    case Connective::Imp: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    default: return 4;
  }
}

int precedence(const Formula& f) {
  return f.kind() == FormulaKind::Binary ? binary_precedence(f.op()) : 4;
}

std::string render(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return f.atom_name();
    case FormulaKind::Unary: {
      std::string inner = render(f.child());
      if (f.child().kind() == FormulaKind::Binary) inner = "(" + inner + ")";
      return latex_connective(f.op()) + inner;
    }
    case FormulaKind::Binary: {
      const int prec = binary_precedence(f.op());
      std::string lhs = render(f.left());
      std::string rhs = render(f.right());
      if (precedence(f.left()) < prec ||
          (precedence(f.left()) == prec && f.op() == Connective::Imp)) {
        lhs = "(" + lhs + ")";
      }
      if (precedence(f.right()) < prec ||
          (precedence(f.right()) == prec && f.op() != Connective::Imp)) {
        rhs = "(" + rhs + ")";
      }
      return lhs + " " + latex_connective(f.op()) + " " + rhs;
    }
  }
  return "?";
}

const char* latex_rule_label(RuleId rule) {
  switch (rule) {
    case RuleId::Ax: return "\\mathrm{Ax}";
    case RuleId::WL: return "W{\\Rightarrow}";
    case RuleId::WR: return "{\\Rightarrow}W";
    case RuleId::Cut: return "\\mathrm{Cut}";
    case RuleId::NegL: return "\\lnot{\\Rightarrow}";
    case RuleId::NegR: return "{\\Rightarrow}\\lnot";
    case RuleId::NegL_H: return "\\lnot^{H}{\\Rightarrow}";
    case RuleId::NegR_B: return "{\\Rightarrow}\\lnot^{B}";
    case RuleId::AndL: return "\\wedge{\\Rightarrow}";
    case RuleId::AndR: return "{\\Rightarrow}\\wedge";
    case RuleId::OrL: return "\\vee{\\Rightarrow}";
    case RuleId::OrR: return "{\\Rightarrow}\\vee";
    case RuleId::ImpL: return "{\\to}{\\Rightarrow}";
    case RuleId::ImpR: return "{\\Rightarrow}{\\to}";
    case RuleId::AndL_H: return "\\wedge^{H}{\\Rightarrow}";
    case RuleId::AndR_Hm: return "{\\Rightarrow}\\wedge";
    case RuleId::ImpL_H: return "{\\to}^{H}{\\Rightarrow}";
    case RuleId::ImpR_Hm: return "{\\Rightarrow}{\\to}";
    case RuleId::OrL_Bm: return "\\vee{\\Rightarrow}";
    case RuleId::OrR_B: return "{\\Rightarrow}\\vee^{B}";
    case RuleId::ImpL_Bm: return "{\\to}{\\Rightarrow}";
    case RuleId::ImpR_B: return "{\\Rightarrow}{\\to}^{B}";
  }
  return "?";
}

std::string render_proof(const ProofTree& t) {
  std::string premises;
  for (std::size_t i = 0; i < t.premises.size(); i++) {
    if (i > 0) premises += " \\quad ";
    premises += render_proof(t.premises[i]);
  }
  return "\\dfrac{" + premises + "}{" + latex_sequent(t.conclusion) + "}\\;{\\scriptstyle " +
         latex_rule_label(t.rule) + "}";
}

}  // namespace

std::string latex_formula(const Formula& f) { return render(f); }

std::string latex_sequent(const Sequent& s) {
  std::string out;
  bool first = true;
  for (const auto& f : s.ant()) {
    if (!first) out += ", ";
    out += render(f);
    first = false;
  }
  out += " \\Rightarrow ";
  first = true;
  for (const auto& f : s.suc()) {
    if (!first) out += ", ";
    out += render(f);
    first = false;
  }
  return out;
}

std::string latex_proof(const ProofTree& t) { return render_proof(t); }

}  // namespace bh3
