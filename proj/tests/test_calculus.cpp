#include <doctest.h>

#include <random>

#include "bh3/calculus.hpp"
#include "bh3/errors.hpp"
#include "bh3/json_io.hpp"
#include "bh3/latex.hpp"
#include "bh3/parser.hpp"
#include "bh3/prover.hpp"
#include "bh3/semantics.hpp"
#include "gen.hpp"

using namespace bh3;

namespace {

Formula F(const std::string& text) { return parse_formula(text, ConnectiveSet::all()); }

Sequent S(const std::string& text) { return parse_sequent(text, ConnectiveSet::all()); }

bool proofs_equal(const ProofTree& a, const ProofTree& b) {
  if (!(a.conclusion == b.conclusion) || a.rule != b.rule) return false;
  if (a.principal.has_value() != b.principal.has_value()) return false;
  if (a.principal && !(*a.principal == *b.principal)) return false;
  if (a.premises.size() != b.premises.size()) return false;
  for (std::size_t i = 0; i < a.premises.size(); i++) {
    if (!proofs_equal(a.premises[i], b.premises[i])) return false;
  }
  return true;
}

// Ax: p => p; WR: p => p, q; NegL: ~p, p => q  (the spec's hand-checked tree)
ProofTree spec_tree(RuleId root_rule) {
  ProofTree ax{S("p => p"), RuleId::Ax, Principal{Side::Ant, F("p")}, {}};
  ProofTree wr{S("p => p, q"), RuleId::WR, Principal{Side::Suc, F("q")}, {std::move(ax)}};
  return ProofTree{S("~p, p => q"), root_rule, Principal{Side::Ant, F("~p")}, {std::move(wr)}};
}

void strip_from_succedents(ProofTree& t, const Formula& f) {
  auto ant = t.conclusion.ant();
  auto suc = t.conclusion.suc().without(f);
  if (auto s = Sequent::try_make(ant, suc)) t.conclusion = *s;
  for (auto& premise : t.premises) strip_from_succedents(premise, f);
}

}  // namespace

TEST_CASE("premises_for reads rules bottom-up with set semantics") {
  // NegL_H with satisfied proviso
  auto app = premises_for(S("~p, q => q | p"), RuleId::NegL_H,
                          Principal{Side::Ant, F("~p")}, CalculusId::H);
  REQUIRE(app.ok());
  REQUIRE(app.premises.size() == 1);
  CHECK(app.premises[0] == S("q => q | p, p"));

  // proviso failure: vars(q) not within vars({p})
  auto blocked = premises_for(S("~q, p => p"), RuleId::NegL_H, Principal{Side::Ant, F("~q")},
                              CalculusId::H);
  CHECK(blocked.status == ApplyStatus::ProvisoViolated);

  auto andl = premises_for(S("p & q => p"), RuleId::AndL, Principal{Side::Ant, F("p & q")},
                           CalculusId::C2);
  REQUIRE(andl.ok());
  CHECK(andl.premises[0] == S("p, q => p"));
}

TEST_CASE("premises_for rejects misuse") {
  CHECK(premises_for(S("~p, p => q"), RuleId::NegL, Principal{Side::Ant, F("~p")},
                     CalculusId::H)
            .status == ApplyStatus::RuleNotInCalculus);
  CHECK(premises_for(S("p => q"), RuleId::NegR, Principal{Side::Suc, F("~q")}, CalculusId::C)
            .status == ApplyStatus::NotApplicable);  // ~q not in the succedent
  CHECK(premises_for(S("p & q => p"), RuleId::AndL, Principal{Side::Suc, F("p & q")},
                     CalculusId::C2)
            .status == ApplyStatus::NotApplicable);  // wrong side
  CHECK(premises_for(S("p => p"), RuleId::NegL, std::nullopt, CalculusId::C).status ==
        ApplyStatus::NotApplicable);  // principal required
  // weakening whose premise would be the empty sequent
  CHECK(premises_for(S("p =>"), RuleId::WL, Principal{Side::Ant, F("p")}, CalculusId::C)
            .status == ApplyStatus::NotApplicable);
}

TEST_CASE("premises_for: remaining rule schemas") {
  CHECK(premises_for(S("=> p & q"), RuleId::AndR, Principal{Side::Suc, F("p & q")},
                     CalculusId::C)
            .premises == std::vector<Sequent>{S("=> p"), S("=> q")});
  CHECK(premises_for(S("p | q =>"), RuleId::OrL, Principal{Side::Ant, F("p | q")},
                     CalculusId::C)
            .premises == std::vector<Sequent>{S("p =>"), S("q =>")});
  CHECK(premises_for(S("=> p | q"), RuleId::OrR, Principal{Side::Suc, F("p | q")},
                     CalculusId::C1)
            .premises == std::vector<Sequent>{S("=> p, q")});
  CHECK(premises_for(S("p -> q => r"), RuleId::ImpL, Principal{Side::Ant, F("p -> q")},
                     CalculusId::C)
            .premises == std::vector<Sequent>{S("=> r, p"), S("q => r")});
  CHECK(premises_for(S("=> p -> q"), RuleId::ImpR, Principal{Side::Suc, F("p -> q")},
                     CalculusId::C)
            .premises == std::vector<Sequent>{S("p => q")});
  CHECK(premises_for(S("p => q"), RuleId::Cut, Principal{Side::Suc, F("r")}, CalculusId::C)
            .premises == std::vector<Sequent>{S("p => q, r"), S("r, p => q")});
  // NegR_B needs var(a) inside var(ant)
  CHECK(premises_for(S("p => ~p"), RuleId::NegR_B, Principal{Side::Suc, F("~p")},
                     CalculusId::B)
            .ok());
  CHECK(premises_for(S("q => ~p"), RuleId::NegR_B, Principal{Side::Suc, F("~p")},
                     CalculusId::B)
            .status == ApplyStatus::ProvisoViolated);
  // retained variant keeps the principal in the context
  auto retained = premises_for(S("=> p | q"), RuleId::OrR, Principal{Side::Suc, F("p | q")},
                               CalculusId::C1, true);
  REQUIRE(retained.ok());
  CHECK(retained.premises[0] == S("=> p, q, p | q"));
}

TEST_CASE("check_proof accepts the spec tree under B and flags it under H") {
  CHECK(check_proof(spec_tree(RuleId::NegL), CalculusId::B).ok());

  auto report = check_proof(spec_tree(RuleId::NegL_H), CalculusId::H);
  CHECK_FALSE(report.ok());
  CHECK(report.has(CheckErrorKind::ProvisoViolated));

  auto wrong_rule = check_proof(spec_tree(RuleId::NegL), CalculusId::H);
  CHECK(wrong_rule.has(CheckErrorKind::RuleNotInCalculus));
}

TEST_CASE("check_proof flags cut, bad leaves, arity and signature problems") {
  ProofTree left{S("p => q, r"), RuleId::Ax, Principal{Side::Ant, F("p")}, {}};
  ProofTree right{S("r, p => q"), RuleId::Ax, Principal{Side::Ant, F("p")}, {}};
  ProofTree cut{S("p => q"), RuleId::Cut, Principal{Side::Suc, F("r")},
                {std::move(left), std::move(right)}};
  auto cut_report = check_proof(cut, CalculusId::C, true);
  CHECK(cut_report.has(CheckErrorKind::CutForbidden));
  CHECK(cut_report.has(CheckErrorKind::BadLeaf));  // those leaves are not axioms

  ProofTree not_ax{S("p => q"), RuleId::Ax, std::nullopt, {}};
  CHECK(check_proof(not_ax, CalculusId::C).has(CheckErrorKind::BadLeaf));

  ProofTree leaf_wl{S("p, q => p"), RuleId::WL, Principal{Side::Ant, F("q")}, {}};
  CHECK(check_proof(leaf_wl, CalculusId::C).has(CheckErrorKind::BadLeaf));

  ProofTree ax{S("p => p"), RuleId::Ax, std::nullopt, {}};
  ProofTree bad_arity{S("p & q => p"), RuleId::AndL, Principal{Side::Ant, F("p & q")},
                      {ax, ax}};
  CHECK(check_proof(bad_arity, CalculusId::C2).has(CheckErrorKind::ShapeMismatch));

  ProofTree sharp_ax{S("#b p => #b p"), RuleId::Ax, std::nullopt, {}};
  CHECK(check_proof(sharp_ax, CalculusId::B).has(CheckErrorKind::SignatureViolation));
  ProofTree or_ax{S("p | q => p | q"), RuleId::Ax, std::nullopt, {}};
  CHECK(check_proof(or_ax, CalculusId::C2).has(CheckErrorKind::SignatureViolation));
  // H identifies & and -> with their abbreviations
  ProofTree and_ax{S("p & q => p & q"), RuleId::Ax, std::nullopt, {}};
  CHECK(check_proof(and_ax, CalculusId::H).ok());
}

TEST_CASE("check_proof accepts retained-principal instances") {
  // => ~q, ~~q closed through the widening construction: the second NegR
  // keeps ~q in the succedent context.
  ProofTree ax{S("q => q"), RuleId::Ax, Principal{Side::Ant, F("q")}, {}};
  ProofTree wr1{S("q => q, ~q"), RuleId::WR, Principal{Side::Suc, F("~q")}, {std::move(ax)}};
  ProofTree wr2{S("q => q, ~q, ~~q"), RuleId::WR, Principal{Side::Suc, F("~~q")},
                {std::move(wr1)}};
  ProofTree negl{S("q, ~q => ~q, ~~q"), RuleId::NegL_H, Principal{Side::Ant, F("~q")},
                 {std::move(wr2)}};
  ProofTree negr2{S("q => ~q, ~~q"), RuleId::NegR, Principal{Side::Suc, F("~~q")},
                  {std::move(negl)}};
  ProofTree root{S("=> ~q, ~~q"), RuleId::NegR, Principal{Side::Suc, F("~q")},
                 {std::move(negr2)}};
  CHECK(check_proof(root, CalculusId::H, true).ok());
}

TEST_CASE("is_cut_free, and Cut is checkable when not forbidden") {
  ProofTree ax{S("p => p"), RuleId::Ax, std::nullopt, {}};
  CHECK(is_cut_free(ax));
  ProofTree cut{S("p => p"), RuleId::Cut, Principal{Side::Suc, F("q")},
                {ProofTree{S("p => p, q"), RuleId::WR, Principal{Side::Suc, F("q")}, {ax}},
                 ProofTree{S("q, p => p"), RuleId::WL, Principal{Side::Ant, F("q")}, {ax}}}};
  CHECK_FALSE(is_cut_free(cut));
  for (CalculusId cal : {CalculusId::C, CalculusId::C1, CalculusId::H, CalculusId::B}) {
    CHECK(check_proof(cut, cal).ok());
    CHECK(check_proof(cut, cal, true).has(CheckErrorKind::CutForbidden));
  }
}

TEST_CASE("mutation detection: breaking a NegL_H proviso flips the report") {
  ProveResult result = prove(S("~p, q => q | p"), CalculusId::H);
  REQUIRE(result.proved());
  CHECK(check_proof(*result.proof, CalculusId::H, true).ok());

  ProofTree mutant = *result.proof;
  strip_from_succedents(mutant, F("q | p"));
  auto report = check_proof(mutant, CalculusId::H);
  CHECK_FALSE(report.ok());
  CHECK(report.has(CheckErrorKind::ProvisoViolated));
}

TEST_CASE("proof JSON round trip") {
  ProveResult result = prove(S("~(~p | ~q) => p | q"), CalculusId::H);
  REQUIRE(result.proved());
  nlohmann::json j = proof_to_json(*result.proof);
  ProofTree back = proof_from_json(j);
  CHECK(proofs_equal(back, *result.proof));
  CHECK(check_proof(back, CalculusId::H, true).ok());

  CHECK_THROWS_AS(proof_from_json(nlohmann::json::parse("{\"rule\": \"Ax\"}")), Error);
  CHECK_THROWS_AS(
      proof_from_json(nlohmann::json::parse(
          R"({"sequent": {"ant": ["p"], "suc": ["p"]}, "rule": "Nope", "premises": []})")),
      Error);
}

TEST_CASE("proof JSON schema stays stable") {
  ProofTree ax{S("p => p"), RuleId::Ax, Principal{Side::Ant, F("p")}, {}};
  ProofTree wr{S("p => p, q"), RuleId::WR, Principal{Side::Suc, F("q")}, {std::move(ax)}};
  const std::string expected =
      R"({"premises":[{"premises":[],"principal":{"formula":"p","side":"ant"},)"
      R"("rule":"Ax","sequent":{"ant":["p"],"suc":["p"]}}],)"
      R"("principal":{"formula":"q","side":"suc"},"rule":"WR",)"
      R"("sequent":{"ant":["p"],"suc":["p","q"]}})";
  CHECK(proof_to_json(wr).dump() == expected);

  Countermodel cm{LogicId::B3,
                  Valuation::three_valued({{"p", TruthValue::Half}}),
                  S("=> p | ~p")};
  CHECK(countermodel_to_json(cm).dump() ==
        R"({"logic":"b3","sequent":{"ant":[],"suc":["p | ~p"]},"valuation":{"p":"1/2"}})");
}

TEST_CASE("elaborate: single AndL_H step becomes the displayed primitive chain") {
  // a1 & a2, G => D over a1, a2, G => D with var({a1,a2}) <= var(D)
  ProveResult child = prove(S("p, q => p | q"), CalculusId::H);
  REQUIRE(child.proved());
  ProofTree macro{S("p & q => p | q"), RuleId::AndL_H, Principal{Side::Ant, F("p & q")},
                  {*child.proof}};
  CHECK(check_proof(macro, CalculusId::H).ok());

  ProofTree expanded = elaborate(macro, CalculusId::H);
  CHECK(expanded.conclusion == S("~(~p | ~q) => p | q"));
  CHECK(expanded.rule == RuleId::NegL_H);
  REQUIRE(expanded.premises.size() == 1);
  CHECK(expanded.premises[0].rule == RuleId::OrR);
  CHECK(expanded.premises[0].premises[0].rule == RuleId::NegR);
  CHECK(expanded.premises[0].premises[0].premises[0].rule == RuleId::NegR);
  CHECK(check_proof(expanded, CalculusId::H, true).ok());
  CHECK(is_cut_free(expanded));
}

TEST_CASE("elaborate: AndR_Hm becomes the displayed NegR/OrL/NegL_H/WR tree") {
  ProveResult t1 = prove(S("p, q => p"), CalculusId::H);
  ProveResult t2 = prove(S("p, q => q"), CalculusId::H);
  REQUIRE(t1.proved());
  REQUIRE(t2.proved());
  ProofTree macro{S("p, q => p & q"), RuleId::AndR_Hm, Principal{Side::Suc, F("p & q")},
                  {*t1.proof, *t2.proof}};
  REQUIRE(check_proof(macro, CalculusId::H).ok());

  ProofTree expanded = elaborate(macro, CalculusId::H);
  CHECK(expanded.conclusion == S("p, q => ~(~p | ~q)"));
  CHECK(expanded.rule == RuleId::NegR);
  REQUIRE(expanded.premises.size() == 1);
  const ProofTree& orl = expanded.premises[0];
  CHECK(orl.rule == RuleId::OrL);
  REQUIRE(orl.premises.size() == 2);
  for (const ProofTree& branch : orl.premises) {
    CHECK(branch.rule == RuleId::NegL_H);
    REQUIRE(branch.premises.size() == 1);
    CHECK(branch.premises[0].rule == RuleId::WR);
    REQUIRE(branch.premises[0].principal.has_value());
    CHECK(branch.premises[0].principal->formula == F("~(~p | ~q)"));
  }
  CHECK(check_proof(expanded, CalculusId::H, true).ok());
}

TEST_CASE("elaborate: identity on macro-free fragment proofs") {
  ProveResult result = prove(S("p => p | q"), CalculusId::H);
  REQUIRE(result.proved());
  CHECK(proofs_equal(elaborate(*result.proof, CalculusId::H), *result.proof));
  CHECK(proofs_equal(elaborate(*result.proof, CalculusId::C1), *result.proof));
}

TEST_CASE("elaborate: ImpR_B step turns into primitive steps over ~(a1 & ~a2)") {
  ProveResult child = prove(S("p, p & q => q"), CalculusId::B);
  REQUIRE(child.proved());
  ProofTree macro{S("p & q => p -> q"), RuleId::ImpR_B, Principal{Side::Suc, F("p -> q")},
                  {*child.proof}};
  CHECK(check_proof(macro, CalculusId::B).ok());

  ProofTree expanded = elaborate(macro, CalculusId::B);
  CHECK(expanded.conclusion == S("p & q => ~(p & ~q)"));
  CHECK(check_proof(expanded, CalculusId::B, true).ok());
  bool has_macro = false;
  std::function<void(const ProofTree&)> scan = [&](const ProofTree& node) {
    if (is_macro_rule(node.rule)) has_macro = true;
    for (const auto& premise : node.premises) scan(premise);
  };
  scan(expanded);
  CHECK_FALSE(has_macro);
}

TEST_CASE("elaborate handles degenerate macro instances") {
  // a1 == a2: the two NegR steps of the AndL_H chain collapse into one
  {
    ProveResult child = prove(S("p => p | p"), CalculusId::H);
    REQUIRE(child.proved());
    ProofTree macro{S("p & p => p | p"), RuleId::AndL_H, Principal{Side::Ant, F("p & p")},
                    {*child.proof}};
    REQUIRE(check_proof(macro, CalculusId::H).ok());
    ProofTree expanded = elaborate(macro, CalculusId::H);
    CHECK(expanded.conclusion == S("~(~p | ~p) => p | p"));
    CHECK(check_proof(expanded, CalculusId::H, true).ok());
  }
  // a1 == ~a2: the final NegL of the ImpR_B chain must retain the copy the
  // subtree still uses
  {
    ProveResult child = prove(S("~p, ~p & p => p"), CalculusId::B);
    REQUIRE(child.proved());
    ProofTree macro{S("~p & p => ~p -> p"), RuleId::ImpR_B,
                    Principal{Side::Suc, F("~p -> p")}, {*child.proof}};
    REQUIRE(check_proof(macro, CalculusId::B).ok());
    ProofTree expanded = elaborate(macro, CalculusId::B);
    CHECK(expanded.conclusion == S("~p & p => ~(~p & ~p)"));
    CHECK(check_proof(expanded, CalculusId::B, true).ok());
    CHECK(is_cut_free(expanded));
  }
}

TEST_CASE("elaborate rejects proofs that do not check") {
  ProofTree bogus{S("p => q"), RuleId::Ax, std::nullopt, {}};
  CHECK_THROWS_AS(elaborate(bogus, CalculusId::H), PreconditionError);
}

TEST_CASE("null principal is accepted for Ax in proof JSON") {
  ProofTree ax{S("p => p"), RuleId::Ax, std::nullopt, {}};
  nlohmann::json j = proof_to_json(ax);
  CHECK(j.at("principal").is_null());
  ProofTree back = proof_from_json(j);
  CHECK_FALSE(back.principal.has_value());
  CHECK(check_proof(back, CalculusId::C).ok());
}

TEST_CASE("latex rendering mirrors the rule labels and connectives") {
  CHECK(latex_formula(F("~(p & q) -> r")) == "\\lnot (p \\wedge q) \\to r");
  CHECK(latex_formula(F("#b p | #h q")) == "\\#_{B} p \\vee \\#_{H} q");
  CHECK(latex_sequent(S("p => q | r")) == "p \\Rightarrow q \\vee r");

  ProveResult result = prove(S("~p, q => q | p"), CalculusId::H);
  REQUIRE(result.proved());
  const std::string tex = latex_proof(*result.proof);
  CHECK(tex.find("\\dfrac") != std::string::npos);
  CHECK(tex.find("\\lnot^{H}{\\Rightarrow}") != std::string::npos);
  CHECK(tex.find("\\mathrm{Ax}") != std::string::npos);

  const std::string text = proof_text(*result.proof);
  CHECK(text.find("NegL_H") != std::string::npos);
  CHECK(text.find("=> q | p") != std::string::npos);
}

TEST_CASE("operational rules strictly decrease total degree toward the premises") {
  std::mt19937 rng(61);
  auto total_degree = [](const Sequent& s) {
    int sum = 0;
    for (const auto& f : s.ant()) sum += f.degree();
    for (const auto& f : s.suc()) sum += f.degree();
    return sum;
  };
  int applications = 0;
  while (applications < 300) {
    Sequent s = testgen::random_sequent(rng, testgen::sigma0_ops(), {"p", "q", "r"}, 4, 2);
    for (Side side : {Side::Ant, Side::Suc}) {
      for (const auto& f : (side == Side::Ant ? s.ant() : s.suc())) {
        if (f.is_atom()) continue;
        RuleId rule;
        switch (f.op()) {
          case Connective::Not: rule = side == Side::Ant ? RuleId::NegL : RuleId::NegR; break;
          case Connective::And: rule = side == Side::Ant ? RuleId::AndL : RuleId::AndR; break;
          case Connective::Or: rule = side == Side::Ant ? RuleId::OrL : RuleId::OrR; break;
          default: rule = side == Side::Ant ? RuleId::ImpL : RuleId::ImpR; break;
        }
        auto app = premises_for(s, rule, Principal{side, f}, CalculusId::C);
        if (!app.ok()) continue;
        applications++;
        for (const auto& premise : app.premises) {
          CHECK(total_degree(premise) < total_degree(s));
        }
      }
    }
  }
}
