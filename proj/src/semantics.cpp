#include "bh3/semantics.hpp"

#include <algorithm>
#include <array>

namespace bh3 {

namespace {

using TV = unsigned char;  // 0 = Zero, 1 = Half, 2 = One

// Tables shared by B3 and H3; Half is infectious, the classical corners agree
// with CPL. CPL is the restriction to {0, 2}.
constexpr TV kNeg[3] = {2, 1, 0};
constexpr TV kSharpB[3] = {0, 0, 2};
constexpr TV kSharpH[3] = {2, 0, 2};

constexpr TV kAnd[3][3] = {{0, 1, 0}, {1, 1, 1}, {0, 1, 2}};
constexpr TV kOr[3][3] = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
constexpr TV kImp[3][3] = {{2, 1, 2}, {1, 1, 1}, {0, 1, 2}};

TV code(TruthValue v) { return static_cast<TV>(v); }
TruthValue value(TV c) { return static_cast<TruthValue>(c); }

}  // namespace

const char* truth_value_name(TruthValue v) {
  switch (v) {
    case TruthValue::Zero: return "0";
    case TruthValue::Half: return "1/2";
    case TruthValue::One: return "1";
  }
  return "?";
}

std::optional<TruthValue> truth_value_from_name(std::string_view name) {
  if (name == "0") return TruthValue::Zero;
  if (name == "1/2") return TruthValue::Half;
  if (name == "1") return TruthValue::One;
  return std::nullopt;
}

const char* logic_name(LogicId id) {
  switch (id) {
    case LogicId::CPL: return "cpl";
    case LogicId::B3: return "b3";
    case LogicId::H3: return "h3";
  }
  return "?";
}

std::optional<LogicId> logic_from_name(std::string_view name) {
  if (name == "cpl" || name == "CPL") return LogicId::CPL;
  if (name == "b3" || name == "B3") return LogicId::B3;
  if (name == "h3" || name == "H3") return LogicId::H3;
  return std::nullopt;
}

const Logic& Logic::cpl() {
  static const Logic logic(LogicId::CPL);
  return logic;
}
const Logic& Logic::b3() {
  static const Logic logic(LogicId::B3);
  return logic;
}
const Logic& Logic::h3() {
  static const Logic logic(LogicId::H3);
  return logic;
}
const Logic& Logic::get(LogicId id) {
  switch (id) {
    case LogicId::CPL: return cpl();
    case LogicId::B3: return b3();
    case LogicId::H3: return h3();
  }
  return cpl();
}

bool Logic::designated(TruthValue v) const {
  if (id_ == LogicId::H3) return v != TruthValue::Zero;
  return v == TruthValue::One;
}

bool Logic::admits(Connective c) const {
  switch (c) {
    case Connective::SharpB: return id_ == LogicId::B3;
    case Connective::SharpH: return id_ == LogicId::H3;
    default: return true;
  }
}

TruthValue apply_unary(Connective op, TruthValue v) {
  switch (op) {
    case Connective::Not: return value(kNeg[code(v)]);
    case Connective::SharpB: return value(kSharpB[code(v)]);
    case Connective::SharpH: return value(kSharpH[code(v)]);
    default: throw EvalError("not a unary connective");
  }
}

TruthValue apply_binary(Connective op, TruthValue lhs, TruthValue rhs) {
  switch (op) {
    case Connective::And: return value(kAnd[code(lhs)][code(rhs)]);
    case Connective::Or: return value(kOr[code(lhs)][code(rhs)]);
    case Connective::Imp: return value(kImp[code(lhs)][code(rhs)]);
    default: throw EvalError("not a binary connective");
  }
}

Valuation::Valuation(Assignment assignment, bool classical)
    : assignment_(std::move(assignment)), classical_(classical) {
  if (classical_) {
    for (const auto& [atom, v] : assignment_) {
      if (v == TruthValue::Half) {
        throw EvalError("classical valuation maps '" + atom + "' to 1/2");
      }
    }
  }
}

Valuation Valuation::classical(Assignment assignment) {
  return Valuation(std::move(assignment), true);
}

Valuation Valuation::three_valued(Assignment assignment) {
  return Valuation(std::move(assignment), false);
}

bool Valuation::has(const std::string& atom) const { return assignment_.contains(atom); }

TruthValue Valuation::at(const std::string& atom) const {
  auto it = assignment_.find(atom);
  if (it == assignment_.end()) throw EvalError("atom '" + atom + "' missing from valuation");
  return it->second;
}

bool Valuation::operator==(const Valuation& other) const {
  return classical_ == other.classical_ && assignment_ == other.assignment_;
}

TruthValue evaluate(const Formula& f, const Valuation& v, const Logic& logic) {
  if (logic.id() == LogicId::CPL && !v.classical_role()) {
    throw EvalError("CPL evaluation requires a classical-role valuation");
  }
  switch (f.kind()) {
    case FormulaKind::Atom:
      return v.at(f.atom_name());
    case FormulaKind::Unary: {
      if (!logic.admits(f.op())) {
        throw EvalError(std::string("connective '") + connective_symbol(f.op()) +
                        "' is not admitted by " + logic_name(logic.id()));
      }
      return apply_unary(f.op(), evaluate(f.child(), v, logic));
    }
    case FormulaKind::Binary:
      return apply_binary(f.op(), evaluate(f.left(), v, logic), evaluate(f.right(), v, logic));
  }
  throw EvalError("unreachable");
}

namespace {

// Odometer over sorted atoms, last atom fastest. CPL steps 0 -> 2 directly.
class Odometer {
 public:
  Odometer(const std::set<std::string>& atoms, bool classical)
      : atoms_(atoms.begin(), atoms.end()), digits_(atoms.size(), 0), classical_(classical) {}

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<TV>& digits() const { return digits_; }

  bool advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (digits_[i] < 2) {
        digits_[i] += classical_ ? 2 : 1;
        std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits_.end(), TV{0});
        return true;
      }
    }
    return false;
  }

  Valuation to_valuation() const {
    Valuation::Assignment assignment;
    for (std::size_t i = 0; i < atoms_.size(); i++) {
      assignment.emplace(atoms_[i], value(digits_[i]));
    }
    return classical_ ? Valuation::classical(std::move(assignment))
                      : Valuation::three_valued(std::move(assignment));
  }

 private:
  std::vector<std::string> atoms_;
  std::vector<TV> digits_;
  bool classical_;
};

void check_cap(std::size_t n, std::size_t max_atoms) {
  if (n > max_atoms) {
    throw CapExceededError("enumeration over " + std::to_string(n) +
                           " atoms exceeds the cap of " + std::to_string(max_atoms));
  }
}

// Postorder program for fast repeated evaluation against a digit vector.
// Codes >= 0 load an atom, negative codes apply a connective.
struct Prog {
  static constexpr int kNot = -1, kAnd = -2, kOr = -3, kImp = -4, kSharpB = -5, kSharpH = -6;
  std::vector<int> code;
};

void compile_into(const Formula& f, const std::vector<std::string>& atoms, const Logic& logic,
                  Prog& prog) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), f.atom_name());
      if (it == atoms.end() || *it != f.atom_name()) {
        throw EvalError("atom '" + f.atom_name() + "' missing from valuation");
      }
      prog.code.push_back(static_cast<int>(it - atoms.begin()));
      return;
    }
    case FormulaKind::Unary:
      if (!logic.admits(f.op())) {
        throw EvalError(std::string("connective '") + connective_symbol(f.op()) +
                        "' is not admitted by " + logic_name(logic.id()));
      }
      compile_into(f.child(), atoms, logic, prog);
      prog.code.push_back(f.op() == Connective::Not      ? Prog::kNot
                          : f.op() == Connective::SharpB ? Prog::kSharpB
                                                         : Prog::kSharpH);
      return;
    case FormulaKind::Binary:
      compile_into(f.left(), atoms, logic, prog);
      compile_into(f.right(), atoms, logic, prog);
      prog.code.push_back(f.op() == Connective::And  ? Prog::kAnd
                          : f.op() == Connective::Or ? Prog::kOr
                                                     : Prog::kImp);
      return;
  }
}

TV run(const Prog& prog, const std::vector<TV>& digits, std::vector<TV>& stack) {
  stack.clear();
  for (int op : prog.code) {
    if (op >= 0) {
      stack.push_back(digits[static_cast<std::size_t>(op)]);
      continue;
    }
    if (op == Prog::kNot || op == Prog::kSharpB || op == Prog::kSharpH) {
      TV a = stack.back();
      stack.back() = op == Prog::kNot ? kNeg[a] : op == Prog::kSharpB ? kSharpB[a] : kSharpH[a];
      continue;
    }
    TV b = stack.back();
    stack.pop_back();
    TV a = stack.back();
    stack.back() = op == Prog::kAnd ? kAnd[a][b] : op == Prog::kOr ? kOr[a][b] : kImp[a][b];
  }
  return stack.back();
}

}  // namespace

void for_each_valuation(const std::set<std::string>& atoms, const Logic& logic,
                        const std::function<bool(const Valuation&)>& fn, std::size_t max_atoms) {
  check_cap(atoms.size(), max_atoms);
  Odometer odo(atoms, !logic.three_valued());
  do {
    if (!fn(odo.to_valuation())) return;
  } while (odo.advance());
}

std::vector<Valuation> all_valuations(const std::set<std::string>& atoms, const Logic& logic,
                                      std::size_t max_atoms) {
  std::vector<Valuation> out;
  for_each_valuation(
      atoms, logic,
      [&](const Valuation& v) {
        out.push_back(v);
        return true;
      },
      max_atoms);
  return out;
}

bool holds(const Valuation& v, const Sequent& s, const Logic& logic) {
  for (const auto& f : s.ant()) {
    if (!logic.designated(evaluate(f, v, logic))) return true;
  }
  for (const auto& f : s.suc()) {
    if (logic.designated(evaluate(f, v, logic))) return true;
  }
  return false;
}

ValidityResult is_valid(const Sequent& s, const Logic& logic, std::size_t max_atoms) {
  const std::set<std::string> atom_set = s.vars();
  check_cap(atom_set.size(), max_atoms);
  Odometer odo(atom_set, !logic.three_valued());
  const auto& atoms = odo.atoms();

  std::vector<Prog> ant, suc;
  for (const auto& f : s.ant()) {
    Prog p;
    compile_into(f, atoms, logic, p);
    ant.push_back(std::move(p));
  }
  for (const auto& f : s.suc()) {
    Prog p;
    compile_into(f, atoms, logic, p);
    suc.push_back(std::move(p));
  }

  const bool designate_half = logic.id() == LogicId::H3;
  std::vector<TV> stack;
  do {
    const auto& digits = odo.digits();
    bool model = false;
    for (const auto& p : ant) {
      TV v = run(p, digits, stack);
      if (v == 0 || (v == 1 && !designate_half)) {
        model = true;
        break;
      }
    }
    if (!model) {
      for (const auto& p : suc) {
        TV v = run(p, digits, stack);
        if (v == 2 || (v == 1 && designate_half)) {
          model = true;
          break;
        }
      }
    }
    if (!model) {
      return ValidityResult{Countermodel{logic.id(), odo.to_valuation(), s}};
    }
  } while (odo.advance());
  return ValidityResult{};
}

std::vector<std::pair<Valuation, TruthValue>> truth_table(const Formula& f, const Logic& logic,
                                                          std::size_t max_atoms) {
  std::vector<std::pair<Valuation, TruthValue>> rows;
  for_each_valuation(
      f.vars(), logic,
      [&](const Valuation& v) {
        rows.emplace_back(v, evaluate(f, v, logic));
        return true;
      },
      max_atoms);
  return rows;
}

namespace {

void reject_sharp(const Formula& f) {
  if (!f.well_formed_for(Signature::sigma0())) {
    throw SignatureError("classification requires Sigma0 formulas (no #b/#h)", "#");
  }
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

InferenceReport classify(const FormulaSet& premises, const Formula& conclusion,
                         std::size_t max_atoms) {
  for (const auto& f : premises) reject_sharp(f);
  reject_sharp(conclusion);

  InferenceReport report;
  const Sequent inference(premises, FormulaSet{conclusion});

  ValidityResult cpl = is_valid(inference, Logic::cpl(), max_atoms);
  ValidityResult b3 = is_valid(inference, Logic::b3(), max_atoms);
  ValidityResult h3 = is_valid(inference, Logic::h3(), max_atoms);
  report.cpl_valid = cpl.valid();
  report.b3_valid = b3.valid();
  report.h3_valid = h3.valid();
  report.cpl_countermodel = std::move(cpl.countermodel);
  report.b3_countermodel = std::move(b3.countermodel);
  report.h3_countermodel = std::move(h3.countermodel);

  const std::set<std::string> premise_vars = premises.vars();
  const std::set<std::string> conclusion_vars = conclusion.vars();
  report.vars_conclusion_in_premises = subset(conclusion_vars, premise_vars);
  report.vars_premises_in_conclusion = subset(premise_vars, conclusion_vars);

  // Gamma |= p1 & ~p1 classically iff Gamma is unsatisfiable iff Gamma => {}
  // is CPL-valid.
  if (!premises.empty()) {
    report.premises_cpl_inconsistent =
        is_valid(Sequent(premises, FormulaSet{}), Logic::cpl(), max_atoms).valid();
  }
  report.conclusion_cpl_tautology =
      is_valid(Sequent(FormulaSet{}, FormulaSet{conclusion}), Logic::cpl(), max_atoms).valid();

  return report;
}

}  // namespace bh3
