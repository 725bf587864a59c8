#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "autrel/autmap.hpp"
#include "autrel/classify3.hpp"
#include "autrel/derivation.hpp"
#include "autrel/jvdk.hpp"
#include "autrel/relations.hpp"
#include "autrel/verify.hpp"

namespace autrel::report {

using json = nlohmann::json;

json to_json(const WDegree& d);
WDegree wdegree_from_json(const json& j);

json to_json(const AutWord& w);
AutWord word_from_json(const json& j);

json to_json(const PolyMap& m);
PolyMap map_from_json(const json& j);

json to_json(const RelationReport& r);
/// The ideal's order is rebuilt as graded_lex(d).
RelationReport relation_report_from_json(const json& j);

json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);
json to_json(const NotAnAutomorphism& bad);

json to_json(const ClassifyOutcome& o, const std::optional<NormalForm>& nf);
ClassifyOutcome classify_outcome_from_json(const json& j);
std::optional<NormalForm> normal_form_from_json(const json& j);

json to_json(const LndWitness& w);
LndWitness lnd_witness_from_json(const json& j);

json to_json(const SuiteResult& s);
SuiteResult suite_result_from_json(const json& j);

}  // namespace autrel::report
