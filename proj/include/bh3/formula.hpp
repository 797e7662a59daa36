#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace bh3 {

enum class Connective { Not, And, Or, Imp, SharpB, SharpH };

/// Concrete-syntax token of a connective: "~", "&", "|", "->", "#b", "#h".
const char* connective_symbol(Connective c);

/// The five signatures the library works with.
///
///   Sigma0  = {~, &, |, ->}        full classical signature
///   Sigma1  = {~, |}               disjunction fragment (calculi C1, H)
///   Sigma2  = {~, &}               conjunction fragment (calculi C2, B)
///   Sigma1H = Sigma1 + {#h}        language of H3
///   Sigma2B = Sigma2 + {#b}        language of B3
enum class SignatureId { Sigma0, Sigma1, Sigma2, Sigma1H, Sigma2B };

class Signature {
 public:
  static Signature sigma0() { return Signature(SignatureId::Sigma0); }
  static Signature sigma1() { return Signature(SignatureId::Sigma1); }
  static Signature sigma2() { return Signature(SignatureId::Sigma2); }
  static Signature sigma1h() { return Signature(SignatureId::Sigma1H); }
  static Signature sigma2b() { return Signature(SignatureId::Sigma2B); }
  static std::optional<Signature> from_name(std::string_view name);

  SignatureId id() const { return id_; }
  bool admits(Connective c) const;
  std::string name() const;

 private:
  explicit Signature(SignatureId id) : id_(id) {}
  SignatureId id_;
};

enum class FormulaKind { Atom, Unary, Binary };

/// Immutable propositional formula. Copies share structure and are cheap.
///
/// Identity is structural; two formulas compare equal iff they are the same
/// tree. The canonical rendering (`text()`, minimal parentheses) is computed
/// at construction and doubles as the comparison key, so ordering formulas
/// orders them by their rendered string.
class Formula {
 public:
  /// Atom names match [a-z][a-zA-Z0-9_]*.
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula sharp_b(Formula f);
  static Formula sharp_h(Formula f);
  static Formula unary(Connective op, Formula f);
  static Formula binary(Connective op, Formula lhs, Formula rhs);

  FormulaKind kind() const;
  bool is_atom() const { return kind() == FormulaKind::Atom; }
  Connective op() const;                 // Unary/Binary only
  const std::string& atom_name() const;  // Atom only
  const Formula& child() const;          // Unary only
  const Formula& left() const;           // Binary only
  const Formula& right() const;          // Binary only

  /// Number of connective occurrences.
  int degree() const;

  /// Canonical rendering; parsing it back yields this formula.
  const std::string& text() const;

  bool well_formed_for(const Signature& sig) const;
  void collect_vars(std::set<std::string>& out) const;
  std::set<std::string> vars() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  bool operator<(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> vars_of(const std::vector<Formula>& formulas);

/// Rewrites derived connectives into the target fragment:
///
///   Sigma1:  a & b  ->  ~(~a | ~b)      a -> b  ->  ~a | b
///   Sigma2:  a | b  ->  ~(~a & ~b)      a -> b  ->  ~(a & ~b)
///
/// Atoms and negation pass through. `target` must be Sigma1 or Sigma2; a
/// formula containing #b/#h is rejected with SignatureError.
Formula expand_to(const Formula& f, const Signature& target);

}  // namespace bh3
