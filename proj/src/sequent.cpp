#include "bh3/sequent.hpp"

#include <algorithm>

#include "bh3/errors.hpp"

namespace bh3 {

FormulaSet::FormulaSet(std::vector<Formula> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

FormulaSet::FormulaSet(std::initializer_list<Formula> items)
    : FormulaSet(std::vector<Formula>(items)) {}

bool FormulaSet::contains(const Formula& f) const {
  return std::binary_search(items_.begin(), items_.end(), f);
}

FormulaSet FormulaSet::with(const Formula& f) const {
  if (contains(f)) return *this;
  FormulaSet out = *this;
  out.items_.insert(std::lower_bound(out.items_.begin(), out.items_.end(), f), f);
  return out;
}

FormulaSet FormulaSet::with_all(const FormulaSet& other) const {
  FormulaSet out = *this;
  for (const auto& f : other) {
    if (!out.contains(f)) {
      out.items_.insert(std::lower_bound(out.items_.begin(), out.items_.end(), f), f);
    }
  }
  return out;
}

FormulaSet FormulaSet::without(const Formula& f) const {
  FormulaSet out;
  out.items_.reserve(items_.size());
  for (const auto& g : items_) {
    if (!(g == f)) out.items_.push_back(g);
  }
  return out;
}

std::set<std::string> FormulaSet::vars() const { return vars_of(items_); }

bool FormulaSet::operator==(const FormulaSet& other) const { return items_ == other.items_; }

Sequent::Sequent(FormulaSet ant, FormulaSet suc) : ant_(std::move(ant)), suc_(std::move(suc)) {
  if (ant_.empty() && suc_.empty()) {
    throw Error("a sequent must not have both sides empty");
  }
}

std::optional<Sequent> Sequent::try_make(FormulaSet ant, FormulaSet suc) {
  if (ant.empty() && suc.empty()) return std::nullopt;
  return Sequent(std::move(ant), std::move(suc));
}

std::set<std::string> Sequent::vars() const {
  std::set<std::string> out = ant_.vars();
  for (const auto& f : suc_) f.collect_vars(out);
  return out;
}

bool Sequent::well_formed_for(const Signature& sig) const {
  for (const auto& f : ant_) {
    if (!f.well_formed_for(sig)) return false;
  }
  for (const auto& f : suc_) {
    if (!f.well_formed_for(sig)) return false;
  }
  return true;
}

std::string Sequent::text() const {
  std::string out;
  bool first = true;
  for (const auto& f : ant_) {
    if (!first) out += ", ";
    out += f.text();
    first = false;
  }
  out += out.empty() ? "=>" : " =>";
  first = true;
  for (const auto& f : suc_) {
    out += first ? " " : ", ";
    out += f.text();
    first = false;
  }
  return out;
}

bool Sequent::operator==(const Sequent& other) const {
  return ant_ == other.ant_ && suc_ == other.suc_;
}

}  // namespace bh3
