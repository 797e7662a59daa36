#include <doctest.h>

#include <random>

#include "bh3/errors.hpp"
#include "bh3/parser.hpp"
#include "bh3/semantics.hpp"
#include "gen.hpp"

using namespace bh3;

namespace {

Formula F(const std::string& text) { return parse_formula(text, ConnectiveSet::all()); }

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Formula r = Formula::atom("r");

}  // namespace

TEST_CASE("parsing follows the grammar and the declared precedence") {
  CHECK(parse_formula("p & ~q", Signature::sigma2()) ==
        Formula::conjunction(p, Formula::negation(q)));
  CHECK(parse_formula("p -> q -> r", Signature::sigma0()) ==
        Formula::implication(p, Formula::implication(q, r)));
  CHECK(F("p | q & r") == Formula::disjunction(p, Formula::conjunction(q, r)));
  CHECK(F("p & q | r") == Formula::disjunction(Formula::conjunction(p, q), r));
  CHECK(F("~p & q") == Formula::conjunction(Formula::negation(p), q));
  CHECK(F("#b p & q") == Formula::conjunction(Formula::sharp_b(p), q));
  CHECK(F("~#h p") == Formula::negation(Formula::sharp_h(p)));
  CHECK(F("(p -> q) -> r") == Formula::implication(Formula::implication(p, q), r));
  CHECK(F("p1 & under_score2") ==
        Formula::conjunction(Formula::atom("p1"), Formula::atom("under_score2")));
}

TEST_CASE("parsing rejects connectives outside the signature") {
  CHECK_THROWS_AS(parse_formula("p | q", Signature::sigma2()), SignatureError);
  CHECK_THROWS_AS(parse_formula("p -> q", Signature::sigma1()), SignatureError);
  CHECK_THROWS_AS(parse_formula("#b p", Signature::sigma0()), SignatureError);
  CHECK_THROWS_AS(parse_formula("#h p", Signature::sigma2b()), SignatureError);
  try {
    parse_formula("p | q", Signature::sigma2());
    FAIL("expected SignatureError");
  } catch (const SignatureError& e) {
    CHECK(e.connective == "|");
  }
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(F(""), ParseError);
  CHECK_THROWS_AS(F("p &"), ParseError);
  CHECK_THROWS_AS(F("(p"), ParseError);
  CHECK_THROWS_AS(F("p q"), ParseError);
  CHECK_THROWS_AS(F("P"), ParseError);
  CHECK_THROWS_AS(F("p - q"), ParseError);
  try {
    F("p & & q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("rendering uses minimal parentheses") {
  CHECK(Formula::conjunction(p, Formula::negation(q)).text() == "p & ~q");
  CHECK(Formula::implication(Formula::implication(p, q), r).text() == "(p -> q) -> r");
  CHECK(Formula::implication(p, Formula::implication(q, r)).text() == "p -> q -> r");
  CHECK(p.text() == "p");
  CHECK(Formula::disjunction(Formula::disjunction(p, q), r).text() == "p | q | r");
  CHECK(Formula::disjunction(p, Formula::disjunction(q, r)).text() == "p | (q | r)");
  CHECK(Formula::negation(Formula::conjunction(p, q)).text() == "~(p & q)");
  CHECK(Formula::sharp_b(Formula::disjunction(p, q)).text() == "#b (p | q)");
}

TEST_CASE("parse of render is the identity on random formulas") {
  std::mt19937 rng(20240901);
  auto ops = testgen::sigma0_ops();
  ops.push_back(Connective::SharpB);
  ops.push_back(Connective::SharpH);
  for (int i = 0; i < 500; i++) {
    Formula f = testgen::random_formula(rng, ops, {"p", "q", "r", "s1"}, 7);
    CHECK(F(f.text()) == f);
  }
}

TEST_CASE("vars collects exactly the occurring atoms") {
  CHECK(F("p | ~q").vars() == std::set<std::string>{"p", "q"});
  CHECK(F("~~p & p").vars() == std::set<std::string>{"p"});
  CHECK(vars_of({F("p -> q"), r}) == std::set<std::string>{"p", "q", "r"});
}

TEST_CASE("degree counts connective occurrences") {
  CHECK(p.degree() == 0);
  CHECK(F("~p").degree() == 1);
  CHECK(F("~(p & ~q)").degree() == 3);
}

TEST_CASE("invalid atom names are rejected") {
  CHECK_THROWS_AS(Formula::atom(""), Error);
  CHECK_THROWS_AS(Formula::atom("Pq"), Error);
  CHECK_THROWS_AS(Formula::atom("1p"), Error);
  CHECK_THROWS_AS(Formula::atom("p q"), Error);
}

TEST_CASE("expand_to rewrites the definitional clauses") {
  CHECK(expand_to(F("p -> q"), Signature::sigma1()) == F("~p | q"));
  CHECK(expand_to(F("p & q"), Signature::sigma1()) == F("~(~p | ~q)"));
  CHECK(expand_to(F("p -> q"), Signature::sigma2()) == F("~(p & ~q)"));
  CHECK(expand_to(F("p | q"), Signature::sigma2()) == F("~(~p & ~q)"));
  CHECK(expand_to(F("~p"), Signature::sigma1()) == F("~p"));
  CHECK_THROWS_AS(expand_to(F("#b p"), Signature::sigma2()), SignatureError);
  CHECK_THROWS_AS(expand_to(p, Signature::sigma0()), Error);
}

TEST_CASE("expansion preserves variables and semantics") {
  std::mt19937 rng(7);
  const std::vector<std::string> atoms{"p", "q", "r"};
  for (int i = 0; i < 200; i++) {
    Formula f = testgen::random_formula(rng, testgen::sigma0_ops(), atoms, 5);
    for (auto target : {Signature::sigma1(), Signature::sigma2()}) {
      Formula g = expand_to(f, target);
      CHECK(g.well_formed_for(target));
      CHECK(g.vars() == f.vars());
      for_each_valuation(f.vars(), Logic::h3(), [&](const Valuation& v) {
        CHECK(evaluate(f, v, Logic::h3()) == evaluate(g, v, Logic::h3()));
        CHECK(evaluate(f, v, Logic::b3()) == evaluate(g, v, Logic::b3()));
        return true;
      });
      for_each_valuation(f.vars(), Logic::cpl(), [&](const Valuation& v) {
        CHECK(evaluate(f, v, Logic::cpl()) == evaluate(g, v, Logic::cpl()));
        return true;
      });
    }
  }
}

TEST_CASE("sequent text form round trips") {
  const ConnectiveSet all = ConnectiveSet::all();
  Sequent s = parse_sequent("p, ~q => r | s", all);
  CHECK(s.ant().size() == 2);
  CHECK(s.suc().size() == 1);
  CHECK(parse_sequent(s.text(), all) == s);

  Sequent empty_ant = parse_sequent("=> p | ~p", all);
  CHECK(empty_ant.ant().empty());
  CHECK(empty_ant.text() == "=> p | ~p");

  Sequent empty_suc = parse_sequent("p, q =>", all);
  CHECK(empty_suc.suc().empty());

  CHECK_THROWS_AS(parse_sequent("=>", all), ParseError);
  CHECK_THROWS_AS(parse_sequent("p => q => r", all), ParseError);
  CHECK_THROWS_AS(parse_sequent("p, q", all), ParseError);
}

TEST_CASE("the parser never crashes on garbage") {
  std::mt19937 rng(271828);
  const std::string alphabet = "pq~&|->#bh() \t0_z=";
  int parsed = 0;
  for (int i = 0; i < 3000; i++) {
    std::string text;
    const std::size_t len = rng() % 12;
    for (std::size_t j = 0; j < len; j++) text += alphabet[rng() % alphabet.size()];
    try {
      Formula f = F(text);
      parsed++;
      CHECK(F(f.text()) == f);
    } catch (const ParseError&) {
    } catch (const SignatureError&) {
    }
  }
  CHECK(parsed > 0);
}

TEST_CASE("formula sets deduplicate structurally and stay sorted") {
  FormulaSet set{F("~~p & p"), F("q"), F("~~p & p")};
  CHECK(set.size() == 2);
  CHECK(set.contains(F("~~p & p")));
  CHECK(set.with(F("q")).size() == 2);
  CHECK(set.without(F("q")).size() == 1);
  CHECK_THROWS_AS(Sequent(FormulaSet{}, FormulaSet{}), Error);
}
