#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flowtype/flow.hpp"
#include "flowtype/metric.hpp"
#include "flowtype/oracle.hpp"
#include "flowtype/seminorm.hpp"
#include "flowtype/weaktype.hpp"

// JSON boundary for every external interface. Rationals cross as "p/q"
// strings in lowest terms; emission is deterministic (sorted keys, canonical
// element strings, sorted structure lists).
namespace flowtype::io {

using nlohmann::json;

json parse_text(const std::string& text);  // throws ParseError on bad JSON

Group group_from_json(const json& j);
json group_to_json(const Group& g);

Element element_from_json(const Group& g, const json& j);
json element_to_json(const Group& g, const Element& e);

// Accepts a JSON array of elements, or a comma-separated string of element
// tokens ("-1,0,1", "e,a,A"); for lattices of dimension >= 2 use the array.
SymSet symset_from_json(const Group& g, const json& j);
SymSet symset_from_text(const Group& g, const std::string& text);
json symset_to_json(const Group& g, const SymSet& s);

Seminorm seminorm_from_json(const Group& g, const json& j);
json seminorm_to_json(const Seminorm& s);

FiniteMetricSpace metric_from_json(const json& j);

Flow flow_from_json(const json& j);
json flow_to_json(const Flow& f);

ClopenSet clopen_from_json(const json& j);
json clopen_to_json(const ClopenSet& c);

// Clopen object for subshifts, array of point indices for finite flows.
FlowSet flowset_from_json(const Flow& f, const json& j);
json flowset_to_json(const Flow& f, const FlowSet& s);

LStructure structure_from_json(const Group& g, const json& j);
json structure_to_json(const Group& g, const LStructure& m);

WeakType weaktype_from_json(const Group& g, const json& j);
json weaktype_to_json(const Group& g, const WeakType& t);

json point_witness_to_json(const PointWitness& w);

json bk_report_to_json(const Group& g, const BkReport& r);
json fubini_witness_to_json(const Group& g, const FubiniWitness& w);
json containment_to_json(const Group& g, const ContainmentResult& r);
json factor_to_json(const std::optional<FactorMap>& f);
json theorem_report_to_json(const TheoremReport& r);

std::string dump(const json& j);  // stable two-space indentation plus newline

} // namespace flowtype::io
