#pragma once

#include <string>
#include <string_view>

#include "bh3/errors.hpp"
#include "bh3/formula.hpp"
#include "bh3/sequent.hpp"

namespace bh3 {

/// Which connectives a parse accepts. Signatures give the five named
/// vocabularies; logics admit the four classical connectives plus their own
/// meaningful connective.
class ConnectiveSet {
 public:
  static ConnectiveSet all();
  static ConnectiveSet none();
  static ConnectiveSet for_signature(const Signature& sig);

  ConnectiveSet with(Connective c) const;
  bool admits(Connective c) const { return (mask_ & bit(c)) != 0; }

  /// Label used in signature-violation messages, e.g. "Sigma1".
  ConnectiveSet labeled(std::string label) const;
  const std::string& label() const { return label_; }

 private:
  static unsigned bit(Connective c) { return 1u << static_cast<unsigned>(c); }
  unsigned mask_ = 0;
  std::string label_ = "signature";
};

/// Grammar (whitespace insignificant between tokens):
///
///   formula := imp
///   imp     := or ("->" imp)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := ("~" | "#b" | "#h") unary | atom | "(" formula ")"
///   atom    := [a-z][a-zA-Z0-9_]*
///
/// Throws ParseError (with position) on bad syntax and SignatureError when a
/// connective outside `allowed` occurs.
Formula parse_formula(std::string_view text, const ConnectiveSet& allowed);
Formula parse_formula(std::string_view text, const Signature& sig);

/// "Gamma-list => Delta-list": comma-separated formulas around a single "=>".
/// Either side may be blank, not both.
Sequent parse_sequent(std::string_view text, const ConnectiveSet& allowed);
Sequent parse_sequent(std::string_view text, const Signature& sig);

}  // namespace bh3
