#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bh3/errors.hpp"
#include "bh3/formula.hpp"
#include "bh3/sequent.hpp"

namespace bh3 {

/// V = {0, 1/2, 1}; Half is the nonsensical value.
enum class TruthValue : unsigned char { Zero = 0, Half = 1, One = 2 };

const char* truth_value_name(TruthValue v);  // "0", "1/2", "1"
std::optional<TruthValue> truth_value_from_name(std::string_view name);

enum class LogicId { CPL, B3, H3 };

const char* logic_name(LogicId id);  // "cpl", "b3", "h3"
std::optional<LogicId> logic_from_name(std::string_view name);

/// Matrix logic: shared 3-valued tables for ~ & | ->, plus #b (B3 only) and
/// #h (H3 only). CPL is the restriction of the tables to {0, 1}. Designated
/// values: {1} for CPL and B3, {1, 1/2} for H3.
class Logic {
 public:
  explicit Logic(LogicId id) : id_(id) {}
  static const Logic& cpl();
  static const Logic& b3();
  static const Logic& h3();
  static const Logic& get(LogicId id);

  LogicId id() const { return id_; }
  bool three_valued() const { return id_ != LogicId::CPL; }
  bool designated(TruthValue v) const;
  bool admits(Connective c) const;

 private:
  LogicId id_;
};

/// Table application, independent of designation.
TruthValue apply_unary(Connective op, TruthValue v);
TruthValue apply_binary(Connective op, TruthValue lhs, TruthValue rhs);

/// Finite total assignment of truth values to atoms. A classical-role
/// valuation never maps an atom to Half (enforced on construction).
class Valuation {
 public:
  using Assignment = std::map<std::string, TruthValue>;

  static Valuation classical(Assignment assignment);
  static Valuation three_valued(Assignment assignment);

  bool classical_role() const { return classical_; }
  bool has(const std::string& atom) const;
  TruthValue at(const std::string& atom) const;  // EvalError when missing
  const Assignment& assignment() const { return assignment_; }

  bool operator==(const Valuation& other) const;

 private:
  Valuation(Assignment assignment, bool classical);
  Assignment assignment_;
  bool classical_;
};

inline constexpr std::size_t kDefaultMaxAtoms = 16;

/// Bottom-up table evaluation. Errors: atom outside the valuation, connective
/// not admitted by the logic, non-classical valuation under CPL.
TruthValue evaluate(const Formula& f, const Valuation& v, const Logic& logic);

/// Exhaustive, duplicate-free enumeration: 2^n valuations for CPL, 3^n
/// otherwise. Atoms are sorted by name; values cycle Zero < Half < One with
/// the last atom varying fastest. The callback returns false to stop early.
void for_each_valuation(const std::set<std::string>& atoms, const Logic& logic,
                        const std::function<bool(const Valuation&)>& fn,
                        std::size_t max_atoms = kDefaultMaxAtoms);

std::vector<Valuation> all_valuations(const std::set<std::string>& atoms, const Logic& logic,
                                      std::size_t max_atoms = kDefaultMaxAtoms);

/// Model condition of Definition "model of a sequent": some antecedent member
/// evaluates outside the designated set, or some succedent member inside it.
bool holds(const Valuation& v, const Sequent& s, const Logic& logic);

/// Valuation witnessing invalidity of `sequent` in `logic`.
struct Countermodel {
  LogicId logic;
  Valuation valuation;
  Sequent sequent;
};

struct ValidityResult {
  std::optional<Countermodel> countermodel;
  bool valid() const { return !countermodel.has_value(); }
};

/// Brute force over all valuations of vars(s); on failure reports the first
/// countermodel in enumeration order.
ValidityResult is_valid(const Sequent& s, const Logic& logic,
                        std::size_t max_atoms = kDefaultMaxAtoms);

/// Rows (valuation, value) in enumeration order.
std::vector<std::pair<Valuation, TruthValue>> truth_table(
    const Formula& f, const Logic& logic, std::size_t max_atoms = kDefaultMaxAtoms);

/// Classification of an inference under CPL, B3 and H3 together with the
/// sufficient conditions that transfer classical validity to each nonsense
/// logic: var(conclusion) <= var(premises) or classically inconsistent
/// premises (B3 side), var(premises) <= var(conclusion) or a classically
/// tautological conclusion (H3 side).
struct InferenceReport {
  bool cpl_valid = false;
  bool b3_valid = false;
  bool h3_valid = false;
  bool vars_conclusion_in_premises = false;
  bool premises_cpl_inconsistent = false;
  bool vars_premises_in_conclusion = false;
  bool conclusion_cpl_tautology = false;
  std::optional<Countermodel> cpl_countermodel;
  std::optional<Countermodel> b3_countermodel;
  std::optional<Countermodel> h3_countermodel;
};

/// Premises and conclusion must be #-free (Sigma0).
InferenceReport classify(const FormulaSet& premises, const Formula& conclusion,
                         std::size_t max_atoms = kDefaultMaxAtoms);

}  // namespace bh3
