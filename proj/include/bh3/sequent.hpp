#pragma once

#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bh3/formula.hpp"

namespace bh3 {

/// Finite set of formulas in canonical (rendered-string) order.
class FormulaSet {
 public:
  FormulaSet() = default;
  explicit FormulaSet(std::vector<Formula> items);
  FormulaSet(std::initializer_list<Formula> items);

  bool contains(const Formula& f) const;
  FormulaSet with(const Formula& f) const;
  FormulaSet with_all(const FormulaSet& other) const;
  FormulaSet without(const Formula& f) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Formula>& items() const { return items_; }

  std::set<std::string> vars() const;
  bool operator==(const FormulaSet& other) const;
  bool operator!=(const FormulaSet& other) const { return !(*this == other); }

 private:
  std::vector<Formula> items_;  // sorted, unique
};

/// Pair of finite formula sets, not both empty.
class Sequent {
 public:
  /// Throws Error when both sides are empty.
  Sequent(FormulaSet ant, FormulaSet suc);
  static std::optional<Sequent> try_make(FormulaSet ant, FormulaSet suc);

  const FormulaSet& ant() const { return ant_; }
  const FormulaSet& suc() const { return suc_; }

  std::set<std::string> vars() const;
  bool well_formed_for(const Signature& sig) const;

  /// "p, ~q => r | s"; an empty side renders blank.
  std::string text() const;

  bool operator==(const Sequent& other) const;
  bool operator!=(const Sequent& other) const { return !(*this == other); }

 private:
  FormulaSet ant_, suc_;
};

}  // namespace bh3
