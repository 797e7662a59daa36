#include "bh3/json_io.hpp"

#include "bh3/errors.hpp"
#include "bh3/parser.hpp"

namespace bh3 {

using nlohmann::json;

json sequent_to_json(const Sequent& s) {
  json ant = json::array();
  for (const auto& f : s.ant()) ant.push_back(f.text());
  json suc = json::array();
  for (const auto& f : s.suc()) suc.push_back(f.text());
  return json{{"ant", std::move(ant)}, {"suc", std::move(suc)}};
}

Sequent sequent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ant") || !j.contains("suc")) {
    throw Error("sequent JSON needs \"ant\" and \"suc\" arrays");
  }
  const ConnectiveSet allowed = ConnectiveSet::all();
  std::vector<Formula> ant, suc;
  for (const auto& item : j.at("ant")) {
    ant.push_back(parse_formula(item.get<std::string>(), allowed));
  }
  for (const auto& item : j.at("suc")) {
    suc.push_back(parse_formula(item.get<std::string>(), allowed));
  }
  auto made = Sequent::try_make(FormulaSet(std::move(ant)), FormulaSet(std::move(suc)));
  if (!made) throw Error("sequent JSON has both sides empty");
  return *made;
}

json proof_to_json(const ProofTree& t) {
  json premises = json::array();
  for (const auto& premise : t.premises) premises.push_back(proof_to_json(premise));
  json principal;
  if (t.principal) {
    principal = json{{"side", t.principal->side == Side::Ant ? "ant" : "suc"},
                     {"formula", t.principal->formula.text()}};
  } else {
    principal = nullptr;
  }
  return json{{"sequent", sequent_to_json(t.conclusion)},
              {"rule", rule_name(t.rule)},
              {"principal", std::move(principal)},
              {"premises", std::move(premises)}};
}

ProofTree proof_from_json(const json& j) {
  if (!j.is_object()) throw Error("proof JSON node must be an object");
  if (!j.contains("sequent") || !j.contains("rule")) {
    throw Error("proof JSON node needs \"sequent\" and \"rule\"");
  }
  Sequent conclusion = sequent_from_json(j.at("sequent"));
  const std::string rule_str = j.at("rule").get<std::string>();
  auto rule = rule_from_name(rule_str);
  if (!rule) throw Error("unknown rule id '" + rule_str + "'");
  std::optional<Principal> principal;
  if (j.contains("principal") && !j.at("principal").is_null()) {
    const json& p = j.at("principal");
    const std::string side = p.at("side").get<std::string>();
    if (side != "ant" && side != "suc") throw Error("principal side must be \"ant\" or \"suc\"");
    principal = Principal{side == "ant" ? Side::Ant : Side::Suc,
                          parse_formula(p.at("formula").get<std::string>(),
                                        ConnectiveSet::all())};
  }
  std::vector<ProofTree> premises;
  if (j.contains("premises")) {
    for (const auto& premise : j.at("premises")) premises.push_back(proof_from_json(premise));
  }
  return ProofTree{std::move(conclusion), *rule, std::move(principal), std::move(premises)};
}

json countermodel_to_json(const Countermodel& cm) {
  json valuation = json::object();
  for (const auto& [atom, value] : cm.valuation.assignment()) {
    valuation[atom] = truth_value_name(value);
  }
  return json{{"logic", logic_name(cm.logic)},
              {"valuation", std::move(valuation)},
              {"sequent", sequent_to_json(cm.sequent)}};
}

json check_report_to_json(const CheckReport& report) {
  json errors = json::array();
  for (const auto& e : report.errors) {
    errors.push_back(json{{"path", e.path},
                          {"kind", check_error_kind_name(e.kind)},
                          {"detail", e.detail}});
  }
  return json{{"ok", report.ok()}, {"errors", std::move(errors)}};
}

json inference_report_to_json(const InferenceReport& report) {
  json out{{"cpl_valid", report.cpl_valid},
           {"b3_valid", report.b3_valid},
           {"h3_valid", report.h3_valid},
           {"b3_conditions",
            {{"vars_conclusion_in_premises", report.vars_conclusion_in_premises},
             {"premises_cpl_inconsistent", report.premises_cpl_inconsistent}}},
           {"h3_conditions",
            {{"vars_premises_in_conclusion", report.vars_premises_in_conclusion},
             {"conclusion_cpl_tautology", report.conclusion_cpl_tautology}}}};
  json countermodels = json::object();
  if (report.cpl_countermodel) countermodels["cpl"] = countermodel_to_json(*report.cpl_countermodel);
  if (report.b3_countermodel) countermodels["b3"] = countermodel_to_json(*report.b3_countermodel);
  if (report.h3_countermodel) countermodels["h3"] = countermodel_to_json(*report.h3_countermodel);
  out["countermodels"] = std::move(countermodels);
  return out;
}

}  // namespace bh3
