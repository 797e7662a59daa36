#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "bh3/calculus.hpp"
#include "bh3/errors.hpp"
#include "bh3/json_io.hpp"
#include "bh3/latex.hpp"
#include "bh3/parser.hpp"
#include "bh3/prover.hpp"
#include "bh3/semantics.hpp"

// Exit codes: 0 provable / valid / check ok, 1 the opposite (countermodel or
// error report on stdout), 2 usage, syntax or cap problems.

namespace {

using bh3::CalculusId;
using bh3::ConnectiveSet;
using bh3::LogicId;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

std::size_t valuation_cap() {
  if (const char* env = std::getenv("BH3_MAX_ATOMS")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
    std::cerr << "warning: ignoring invalid BH3_MAX_ATOMS='" << env << "'\n";
  }
  return bh3::kDefaultMaxAtoms;
}

ConnectiveSet admitted_by_logic(LogicId logic) {
  ConnectiveSet base = ConnectiveSet::none()
                           .with(bh3::Connective::Not)
                           .with(bh3::Connective::And)
                           .with(bh3::Connective::Or)
                           .with(bh3::Connective::Imp);
  switch (logic) {
    case LogicId::CPL: return base.labeled("the language of CPL");
    case LogicId::B3:
      return base.with(bh3::Connective::SharpB).labeled("the language of B3");
    case LogicId::H3:
      return base.with(bh3::Connective::SharpH).labeled("the language of H3");
  }
  return base;
}

LogicId logic_argument(const std::string& name) {
  auto logic = bh3::logic_from_name(name);
  if (!logic) throw CLI::ValidationError("--logic", "expected cpl, b3 or h3");
  return *logic;
}

CalculusId calculus_argument(const std::string& name) {
  auto calculus = bh3::calculus_from_name(name);
  if (!calculus) throw CLI::ValidationError("--calculus", "expected c, c1, c2, h or b");
  return *calculus;
}

void print_countermodel(const bh3::Countermodel& cm, const std::string& format) {
  if (format == "json") {
    std::cout << bh3::countermodel_to_json(cm).dump(2) << "\n";
    return;
  }
  std::cout << "countermodel (" << bh3::logic_name(cm.logic) << "):";
  for (const auto& [atom, value] : cm.valuation.assignment()) {
    std::cout << " " << atom << "=" << bh3::truth_value_name(value);
  }
  std::cout << "\n";
}

void print_proof(const bh3::ProofTree& proof, const std::string& format) {
  if (format == "json") {
    std::cout << bh3::proof_to_json(proof).dump(2) << "\n";
  } else if (format == "latex") {
    std::cout << "\\[\n" << bh3::latex_proof(proof) << "\n\\]\n";
  } else {
    std::cout << bh3::proof_text(proof);
  }
}

int run_prove(const std::string& calculus_name, const std::string& sequent_text,
              const std::string& format, bool cut_free_check) {
  const CalculusId calculus = calculus_argument(calculus_name);
  const bh3::Signature sig = bh3::calculus_signature(calculus);
  bh3::Sequent s = bh3::parse_sequent(
      sequent_text, ConnectiveSet::for_signature(bh3::Signature::sigma0()).labeled("Sigma0"));

  if (!s.well_formed_for(sig)) {
    if (calculus == CalculusId::H || calculus == CalculusId::B) {
      std::vector<bh3::Formula> ant, suc;
      for (const auto& f : s.ant()) ant.push_back(bh3::expand_to(f, sig));
      for (const auto& f : s.suc()) suc.push_back(bh3::expand_to(f, sig));
      s = bh3::Sequent(bh3::FormulaSet(std::move(ant)), bh3::FormulaSet(std::move(suc)));
      std::cerr << "note: expanded to " << sig.name() << ": " << s.text() << "\n";
    } else {
      throw bh3::SignatureError("sequent is not well-formed over " + sig.name(), "");
    }
  }

  std::optional<bh3::ProofTree> proof;
  std::optional<bh3::Countermodel> countermodel;
  if (calculus == CalculusId::H || calculus == CalculusId::B) {
    bh3::ProveResult result = bh3::prove(s, calculus, valuation_cap());
    proof = std::move(result.proof);
    countermodel = std::move(result.countermodel);
  } else {
    bh3::ClassicalResult result = bh3::prove_classical(s, calculus);
    if (result.proved()) {
      proof = std::move(result.proof);
    } else {
      countermodel = bh3::Countermodel{LogicId::CPL,
                                       bh3::countermodel_from_stuck(*result.stuck, s.vars()), s};
    }
  }

  if (!proof) {
    print_countermodel(*countermodel, format == "latex" ? "text" : format);
    return kExitNo;
  }
  if (cut_free_check) {
    if (!bh3::is_cut_free(*proof) || !bh3::check_proof(*proof, calculus, true).ok()) {
      std::cerr << "error: emitted proof failed the cut-free check\n";
      return kExitNo;
    }
    std::cerr << "note: proof is cut-free and checks under " << bh3::calculus_name(calculus)
              << "\n";
  }
  print_proof(*proof, format);
  return kExitYes;
}

int run_valid(const std::string& logic_name_arg, const std::string& sequent_text,
              const std::string& format) {
  const LogicId logic = logic_argument(logic_name_arg);
  const bh3::Sequent s = bh3::parse_sequent(sequent_text, admitted_by_logic(logic));
  bh3::ValidityResult result = bh3::is_valid(s, bh3::Logic::get(logic), valuation_cap());
  if (result.valid()) {
    if (format == "json") {
      std::cout << nlohmann::json{{"valid", true}, {"logic", bh3::logic_name(logic)}}.dump(2)
                << "\n";
    } else {
      std::cout << "valid\n";
    }
    return kExitYes;
  }
  print_countermodel(*result.countermodel, format);
  return kExitNo;
}

int run_classify(const std::string& premises_text, const std::string& conclusion_text,
                 const std::string& format) {
  const ConnectiveSet sigma0 =
      ConnectiveSet::for_signature(bh3::Signature::sigma0()).labeled("Sigma0");
  std::vector<bh3::Formula> premises;
  bool blank = true;
  for (char ch : premises_text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
  }
  if (!blank) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = premises_text.find(',', start);
      premises.push_back(bh3::parse_formula(
          premises_text.substr(start,
                               comma == std::string::npos ? std::string::npos : comma - start),
          sigma0));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  const bh3::Formula conclusion = bh3::parse_formula(conclusion_text, sigma0);
  const bh3::InferenceReport report =
      bh3::classify(bh3::FormulaSet(std::move(premises)), conclusion, valuation_cap());

  if (format == "json") {
    std::cout << bh3::inference_report_to_json(report).dump(2) << "\n";
    return kExitYes;
  }
  auto line = [](const char* name, bool valid) {
    std::cout << name << ": " << (valid ? "valid" : "invalid") << "\n";
  };
  line("cpl", report.cpl_valid);
  line("b3", report.b3_valid);
  line("h3", report.h3_valid);
  std::cout << "b3 conditions: vars(conclusion) in vars(premises)="
            << (report.vars_conclusion_in_premises ? "yes" : "no")
            << ", premises classically inconsistent="
            << (report.premises_cpl_inconsistent ? "yes" : "no") << "\n";
  std::cout << "h3 conditions: vars(premises) in vars(conclusion)="
            << (report.vars_premises_in_conclusion ? "yes" : "no")
            << ", conclusion classical tautology="
            << (report.conclusion_cpl_tautology ? "yes" : "no") << "\n";
  for (const auto& cm : {report.cpl_countermodel, report.b3_countermodel, report.h3_countermodel}) {
    if (cm) print_countermodel(*cm, "text");
  }
  return kExitYes;
}

int run_table(const std::string& logic_name_arg, const std::string& formula_text,
              const std::string& format) {
  const LogicId logic = logic_argument(logic_name_arg);
  const bh3::Formula f = bh3::parse_formula(formula_text, admitted_by_logic(logic));
  const auto rows = bh3::truth_table(f, bh3::Logic::get(logic), valuation_cap());

  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [valuation, value] : rows) {
      nlohmann::json v = nlohmann::json::object();
      for (const auto& [atom, tv] : valuation.assignment()) v[atom] = bh3::truth_value_name(tv);
      out.push_back({{"valuation", std::move(v)}, {"value", bh3::truth_value_name(value)}});
    }
    std::cout << out.dump(2) << "\n";
    return kExitYes;
  }
  const auto atoms = f.vars();
  for (const auto& atom : atoms) std::cout << atom << "\t";
  std::cout << "| " << f.text() << "\n";
  for (const auto& [valuation, value] : rows) {
    for (const auto& atom : atoms) std::cout << bh3::truth_value_name(valuation.at(atom)) << "\t";
    std::cout << "| " << bh3::truth_value_name(value) << "\n";
  }
  return kExitYes;
}

int run_check(const std::string& calculus_name, const std::string& file, bool require_cut_free,
              const std::string& format) {
  const CalculusId calculus = calculus_argument(calculus_name);
  nlohmann::json j;
  if (file == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(file);
    if (!in) throw bh3::Error("cannot open proof file '" + file + "'");
    in >> j;
  }
  const bh3::ProofTree proof = bh3::proof_from_json(j);
  const bh3::CheckReport report = bh3::check_proof(proof, calculus, require_cut_free);
  if (format == "json") {
    std::cout << bh3::check_report_to_json(report).dump(2) << "\n";
  } else if (report.ok()) {
    std::cout << "ok: proof of '" << proof.conclusion.text() << "' checks under "
              << bh3::calculus_name(calculus) << "\n";
  } else {
    for (const auto& e : report.errors) {
      std::cout << "error at [";
      for (std::size_t i = 0; i < e.path.size(); i++) {
        if (i) std::cout << ".";
        std::cout << e.path[i];
      }
      std::cout << "] " << bh3::check_error_kind_name(e.kind) << ": " << e.detail << "\n";
    }
  }
  return report.ok() ? kExitYes : kExitNo;
}

int run_expand(const std::string& target_name, const std::string& formula_text) {
  auto target = bh3::Signature::from_name(target_name);
  if (!target ||
      (target->id() != bh3::SignatureId::Sigma1 && target->id() != bh3::SignatureId::Sigma2)) {
    throw CLI::ValidationError("--target", "expected sigma1 or sigma2");
  }
  const bh3::Formula f = bh3::parse_formula(
      formula_text, ConnectiveSet::for_signature(bh3::Signature::sigma0()).labeled("Sigma0"));
  std::cout << bh3::expand_to(f, *target).text() << "\n";
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bh3 - matrix semantics, sequent calculi and provers for the classical "
               "fragments of the nonsense logics B3 and H3"};
  app.require_subcommand(1);

  std::string calculus = "h", logic = "h3", format = "text", target = "sigma1";
  std::string sequent, formula, premises, conclusion, proof_file;
  bool cut_free_check = false, require_cut_free = false;

  auto* prove = app.add_subcommand("prove", "prove a sequent or report a countermodel");
  prove->add_option("--calculus", calculus, "c, c1, c2, h or b")->required();
  prove->add_option("sequent", sequent, "sequent, e.g. \"p, ~q => r\"")->required();
  prove->add_option("--format", format, "text, json or latex");
  prove->add_flag("--cut-free-check", cut_free_check,
                  "re-check the emitted proof for cut-freeness");

  auto* valid = app.add_subcommand("valid", "decide validity by brute force");
  valid->add_option("--logic", logic, "cpl, b3 or h3")->required();
  valid->add_option("sequent", sequent)->required();
  valid->add_option("--format", format, "text or json");

  auto* classify = app.add_subcommand("classify", "classify an inference across the logics");
  classify->add_option("premises", premises, "comma-separated premises (may be empty)")
      ->required();
  classify->add_option("conclusion", conclusion)->required();
  classify->add_option("--format", format, "text or json");

  auto* table = app.add_subcommand("table", "print a truth table");
  table->add_option("--logic", logic, "cpl, b3 or h3")->required();
  table->add_option("formula", formula)->required();
  table->add_option("--format", format, "text or json");

  auto* check = app.add_subcommand("check", "check a proof in the JSON format");
  check->add_option("--calculus", calculus, "c, c1, c2, h or b")->required();
  check->add_option("file", proof_file, "proof JSON file, or - for stdin")->required();
  check->add_flag("--require-cut-free,--cut-free-check", require_cut_free,
                  "reject proofs containing Cut");
  check->add_option("--format", format, "text or json");

  auto* expand = app.add_subcommand("expand", "expand derived connectives into a fragment");
  expand->add_option("--target", target, "sigma1 or sigma2")->required();
  expand->add_option("formula", formula)->required();

  try {
    app.parse(argc, argv);
    if (prove->parsed()) return run_prove(calculus, sequent, format, cut_free_check);
    if (valid->parsed()) return run_valid(logic, sequent, format);
    if (classify->parsed()) return run_classify(premises, conclusion, format);
    if (table->parsed()) return run_table(logic, formula, format);
    if (check->parsed()) return run_check(calculus, proof_file, require_cut_free, format);
    if (expand->parsed()) return run_expand(target, formula);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitYes : kExitUsage;
  } catch (const bh3::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
