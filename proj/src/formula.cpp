#include "bh3/formula.hpp"

#include <cctype>

#include "bh3/errors.hpp"

namespace bh3 {

const char* connective_symbol(Connective c) {
  switch (c) {
    case Connective::Not: return "~";
    case Connective::And: return "&";
    case Connective::Or: return "|";
    case Connective::Imp: return "->";
    case Connective::SharpB: return "#b";
    case Connective::SharpH: return "#h";
  }
  return "?";
}

bool Signature::admits(Connective c) const {
  switch (id_) {
    case SignatureId::Sigma0:
      return c == Connective::Not || c == Connective::And || c == Connective::Or ||
             c == Connective::Imp;
    case SignatureId::Sigma1:
      return c == Connective::Not || c == Connective::Or;
    case SignatureId::Sigma2:
      return c == Connective::Not || c == Connective::And;
    case SignatureId::Sigma1H:
      return c == Connective::Not || c == Connective::Or || c == Connective::SharpH;
    case SignatureId::Sigma2B:
      return c == Connective::Not || c == Connective::And || c == Connective::SharpB;
  }
  return false;
}

std::string Signature::name() const {
  switch (id_) {
    case SignatureId::Sigma0: return "Sigma0";
    case SignatureId::Sigma1: return "Sigma1";
    case SignatureId::Sigma2: return "Sigma2";
    case SignatureId::Sigma1H: return "Sigma1H";
    case SignatureId::Sigma2B: return "Sigma2B";
  }
  return "?";
}

std::optional<Signature> Signature::from_name(std::string_view name) {
  if (name == "sigma0" || name == "Sigma0") return sigma0();
  if (name == "sigma1" || name == "Sigma1") return sigma1();
  if (name == "sigma2" || name == "Sigma2") return sigma2();
  if (name == "sigma1h" || name == "Sigma1H") return sigma1h();
  if (name == "sigma2b" || name == "Sigma2B") return sigma2b();
  return std::nullopt;
}

struct Formula::Node {
  FormulaKind kind;
  Connective op{Connective::Not};
  std::string atom;
  std::vector<Formula> children;
  std::string text;
  int degree = 0;
};

namespace {

int binary_precedence(Connective op) {
  switch (op) {
    case Connective::Imp: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    default: return 4;
  }
}

// Atoms and unary formulas never need parentheses as subterms.
int formula_precedence(const Formula& f) {
  return f.kind() == FormulaKind::Binary ? binary_precedence(f.op()) : 4;
}

bool valid_atom_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char ch : name) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name)) {
    throw Error("invalid atom name '" + name + "': expected [a-z][a-zA-Z0-9_]*");
  }
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Atom;
  node->atom = name;
  node->text = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::unary(Connective op, Formula f) {
  if (op != Connective::Not && op != Connective::SharpB && op != Connective::SharpH) {
    throw Error("connective is not unary");
  }
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Unary;
  node->op = op;
  node->degree = f.degree() + 1;
  const bool parens = f.kind() == FormulaKind::Binary;
  std::string body = parens ? "(" + f.text() + ")" : f.text();
  node->text = op == Connective::Not ? connective_symbol(op) + body
                                     : std::string(connective_symbol(op)) + " " + body;
  node->children.push_back(std::move(f));
  return Formula(std::move(node));
}

Formula Formula::binary(Connective op, Formula lhs, Formula rhs) {
  if (op != Connective::And && op != Connective::Or && op != Connective::Imp) {
    throw Error("connective is not binary");
  }
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Binary;
  node->op = op;
  node->degree = lhs.degree() + rhs.degree() + 1;
  const int prec = binary_precedence(op);
  // A child of equal precedence stays bare on the associative side only:
  // -> associates right, & and | associate left.
  const bool lhs_parens = formula_precedence(lhs) < prec ||
                          (formula_precedence(lhs) == prec && op == Connective::Imp);
  const bool rhs_parens = formula_precedence(rhs) < prec ||
                          (formula_precedence(rhs) == prec && op != Connective::Imp);
  std::string l = lhs_parens ? "(" + lhs.text() + ")" : lhs.text();
  std::string r = rhs_parens ? "(" + rhs.text() + ")" : rhs.text();
  node->text = l + " " + connective_symbol(op) + " " + r;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::negation(Formula f) { return unary(Connective::Not, std::move(f)); }
Formula Formula::sharp_b(Formula f) { return unary(Connective::SharpB, std::move(f)); }
Formula Formula::sharp_h(Formula f) { return unary(Connective::SharpH, std::move(f)); }
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Connective::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Connective::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Connective::Imp, std::move(lhs), std::move(rhs));
}

FormulaKind Formula::kind() const { return node_->kind; }

Connective Formula::op() const {
  if (node_->kind == FormulaKind::Atom) throw Error("atom has no connective");
  return node_->op;
}

const std::string& Formula::atom_name() const {
  if (node_->kind != FormulaKind::Atom) throw Error("not an atom");
  return node_->atom;
}

const Formula& Formula::child() const {
  if (node_->kind != FormulaKind::Unary) throw Error("not a unary formula");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (node_->kind != FormulaKind::Binary) throw Error("not a binary formula");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->kind != FormulaKind::Binary) throw Error("not a binary formula");
  return node_->children[1];
}

int Formula::degree() const { return node_->degree; }
const std::string& Formula::text() const { return node_->text; }

bool Formula::well_formed_for(const Signature& sig) const {
  switch (kind()) {
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Unary:
      return sig.admits(op()) && child().well_formed_for(sig);
    case FormulaKind::Binary:
      return sig.admits(op()) && left().well_formed_for(sig) && right().well_formed_for(sig);
  }
  return false;
}

void Formula::collect_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case FormulaKind::Atom:
      out.insert(node_->atom);
      return;
    case FormulaKind::Unary:
      child().collect_vars(out);
      return;
    case FormulaKind::Binary:
      left().collect_vars(out);
      right().collect_vars(out);
      return;
  }
}

std::set<std::string> Formula::vars() const {
  std::set<std::string> out;
  collect_vars(out);
  return out;
}

bool Formula::operator==(const Formula& other) const {
  // The canonical rendering is injective, so text equality is structural
  // equality.
  return node_ == other.node_ || node_->text == other.node_->text;
}

bool Formula::operator<(const Formula& other) const { return node_->text < other.node_->text; }

std::set<std::string> vars_of(const std::vector<Formula>& formulas) {
  std::set<std::string> out;
  for (const auto& f : formulas) f.collect_vars(out);
  return out;
}

Formula expand_to(const Formula& f, const Signature& target) {
  if (target.id() != SignatureId::Sigma1 && target.id() != SignatureId::Sigma2) {
    throw Error("expansion target must be Sigma1 or Sigma2, got " + target.name());
  }
  const bool to_sigma1 = target.id() == SignatureId::Sigma1;
  switch (f.kind()) {
    case FormulaKind::Atom:
      return f;
    case FormulaKind::Unary: {
      if (f.op() != Connective::Not) {
        throw SignatureError(std::string("meaningful connective '") + connective_symbol(f.op()) +
                                 "' has no expansion into " + target.name(),
                             connective_symbol(f.op()));
      }
      return Formula::negation(expand_to(f.child(), target));
    }
    case FormulaKind::Binary: {
      Formula lhs = expand_to(f.left(), target);
      Formula rhs = expand_to(f.right(), target);
      switch (f.op()) {
        case Connective::And:
          if (to_sigma1) {
            // a & b = ~(~a | ~b)
            return Formula::negation(
                Formula::disjunction(Formula::negation(lhs), Formula::negation(rhs)));
          }
          return Formula::conjunction(lhs, rhs);
        case Connective::Or:
          if (to_sigma1) return Formula::disjunction(lhs, rhs);
          // a | b = ~(~a & ~b)
          return Formula::negation(
              Formula::conjunction(Formula::negation(lhs), Formula::negation(rhs)));
        case Connective::Imp:
          // a -> b = ~a | b over Sigma1, ~(a & ~b) over Sigma2
          if (to_sigma1) return Formula::disjunction(Formula::negation(lhs), rhs);
          return Formula::negation(Formula::conjunction(lhs, Formula::negation(rhs)));
        default:
          throw Error("unexpected binary connective");
      }
    }
  }
  throw Error("unreachable");
}

}  // namespace bh3
