#include "bh3/parser.hpp"

#include <cctype>

namespace bh3 {

ConnectiveSet ConnectiveSet::all() {
  ConnectiveSet out;
  out.mask_ = bit(Connective::Not) | bit(Connective::And) | bit(Connective::Or) |
              bit(Connective::Imp) | bit(Connective::SharpB) | bit(Connective::SharpH);
  out.label_ = "the full language";
  return out;
}

ConnectiveSet ConnectiveSet::none() { return ConnectiveSet{}; }

ConnectiveSet ConnectiveSet::for_signature(const Signature& sig) {
  ConnectiveSet out;
  for (Connective c : {Connective::Not, Connective::And, Connective::Or, Connective::Imp,
                       Connective::SharpB, Connective::SharpH}) {
    if (sig.admits(c)) out.mask_ |= bit(c);
  }
  out.label_ = sig.name();
  return out;
}

ConnectiveSet ConnectiveSet::with(Connective c) const {
  ConnectiveSet out = *this;
  out.mask_ |= bit(c);
  return out;
}

ConnectiveSet ConnectiveSet::labeled(std::string label) const {
  ConnectiveSet out = *this;
  out.label_ = std::move(label);
  return out;
}

namespace {

enum class TokenKind { Atom, Not, And, Or, Imp, SharpB, SharpH, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) pos_++;
    const std::size_t start = pos_;
    if (pos_ >= input_.size()) {
      current_ = {TokenKind::End, "", start};
      return;
    }
    const char ch = input_[pos_];
    switch (ch) {
      case '~': pos_++; current_ = {TokenKind::Not, "~", start}; return;
      case '&': pos_++; current_ = {TokenKind::And, "&", start}; return;
      case '|': pos_++; current_ = {TokenKind::Or, "|", start}; return;
      case '(': pos_++; current_ = {TokenKind::LParen, "(", start}; return;
      case ')': pos_++; current_ = {TokenKind::RParen, ")", start}; return;
      case '-':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
          pos_ += 2;
          current_ = {TokenKind::Imp, "->", start};
          return;
        }
        throw ParseError("expected '->' at position " + std::to_string(start), start);
      case '#':
        if (pos_ + 1 < input_.size() && (input_[pos_ + 1] == 'b' || input_[pos_ + 1] == 'h')) {
          const bool b = input_[pos_ + 1] == 'b';
          pos_ += 2;
          current_ = {b ? TokenKind::SharpB : TokenKind::SharpH, b ? "#b" : "#h", start};
          return;
        }
        throw ParseError("expected '#b' or '#h' at position " + std::to_string(start), start);
      default:
        break;
    }
    if (ch >= 'a' && ch <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[end])) || input_[end] == '_')) {
        end++;
      }
      current_ = {TokenKind::Atom, std::string(input_.substr(pos_, end - pos_)), start};
      pos_ = end;
      return;
    }
    throw ParseError(std::string("unexpected character '") + ch + "' at position " +
                         std::to_string(start),
                     start);
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  Token current_{TokenKind::End, "", 0};
};

class Parser {
 public:
  Parser(std::string_view text, const ConnectiveSet& allowed) : lexer_(text), allowed_(allowed) {}

  Formula parse() {
    Formula f = parse_imp();
    const Token& t = lexer_.peek();
    if (t.kind != TokenKind::End) {
      throw ParseError("unexpected '" + t.text + "' at position " + std::to_string(t.pos), t.pos);
    }
    return f;
  }

 private:
  void require(Connective c, std::size_t pos) const {
    if (!allowed_.admits(c)) {
      throw SignatureError(std::string("connective '") + connective_symbol(c) +
                               "' is not admitted by " + allowed_.label() + " (position " +
                               std::to_string(pos) + ")",
                           connective_symbol(c));
    }
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (lexer_.peek().kind == TokenKind::Imp) {
      const Token t = lexer_.take();
      require(Connective::Imp, t.pos);
      return Formula::implication(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (lexer_.peek().kind == TokenKind::Or) {
      const Token t = lexer_.take();
      require(Connective::Or, t.pos);
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (lexer_.peek().kind == TokenKind::And) {
      const Token t = lexer_.take();
      require(Connective::And, t.pos);
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    const Token t = lexer_.peek();
    switch (t.kind) {
      case TokenKind::Not:
        lexer_.take();
        require(Connective::Not, t.pos);
        return Formula::negation(parse_unary());
      case TokenKind::SharpB:
        lexer_.take();
        require(Connective::SharpB, t.pos);
        return Formula::sharp_b(parse_unary());
      case TokenKind::SharpH:
        lexer_.take();
        require(Connective::SharpH, t.pos);
        return Formula::sharp_h(parse_unary());
      case TokenKind::Atom:
        lexer_.take();
        return Formula::atom(t.text);
      case TokenKind::LParen: {
        lexer_.take();
        Formula inner = parse_imp();
        const Token close = lexer_.peek();
        if (close.kind != TokenKind::RParen) {
          throw ParseError("expected ')' at position " + std::to_string(close.pos), close.pos);
        }
        lexer_.take();
        return inner;
      }
      case TokenKind::End:
        throw ParseError("unexpected end of input at position " + std::to_string(t.pos), t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "' at position " + std::to_string(t.pos),
                         t.pos);
    }
  }

  Lexer lexer_;
  const ConnectiveSet& allowed_;
};

bool blank(std::string_view s) {
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::vector<Formula> parse_formula_list(std::string_view text, const ConnectiveSet& allowed) {
  std::vector<Formula> out;
  if (blank(text)) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_formula(piece, allowed));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Formula parse_formula(std::string_view text, const ConnectiveSet& allowed) {
  return Parser(text, allowed).parse();
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  return parse_formula(text, ConnectiveSet::for_signature(sig));
}

Sequent parse_sequent(std::string_view text, const ConnectiveSet& allowed) {
  const std::size_t sep = text.find("=>");
  if (sep == std::string_view::npos) {
    throw ParseError("a sequent needs a '=>' separator", 0);
  }
  if (text.find("=>", sep + 2) != std::string_view::npos) {
    throw ParseError("a sequent has exactly one '=>' separator", sep + 2);
  }
  std::vector<Formula> ant = parse_formula_list(text.substr(0, sep), allowed);
  std::vector<Formula> suc = parse_formula_list(text.substr(sep + 2), allowed);
  auto made = Sequent::try_make(FormulaSet(std::move(ant)), FormulaSet(std::move(suc)));
  if (!made) throw ParseError("a sequent must not have both sides empty", 0);
  return *made;
}

Sequent parse_sequent(std::string_view text, const Signature& sig) {
  return parse_sequent(text, ConnectiveSet::for_signature(sig));
}

}  // namespace bh3
