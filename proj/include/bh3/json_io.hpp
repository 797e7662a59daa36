#pragma once

#include <json.hpp>

#include "bh3/calculus.hpp"
#include "bh3/semantics.hpp"

namespace bh3 {

/// {"ant": ["p", "~q"], "suc": ["r | s"]}
nlohmann::json sequent_to_json(const Sequent& s);
Sequent sequent_from_json(const nlohmann::json& j);

/// {"sequent": {...}, "rule": "NegL_H",
///  "principal": {"side": "ant"|"suc", "formula": "..."} | null,
///  "premises": [...]}
nlohmann::json proof_to_json(const ProofTree& t);
ProofTree proof_from_json(const nlohmann::json& j);

/// {"logic": "b3"|"h3"|"cpl", "valuation": {"p": "0"|"1/2"|"1", ...},
///  "sequent": {...}}
nlohmann::json countermodel_to_json(const Countermodel& cm);

nlohmann::json check_report_to_json(const CheckReport& report);
nlohmann::json inference_report_to_json(const InferenceReport& report);

}  // namespace bh3
