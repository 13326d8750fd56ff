#pragma once

#include <json.hpp>

#include "critical.hpp"
#include "ng.hpp"
#include "solver.hpp"

namespace gfree {

using Json = nlohmann::ordered_json;

Json graph_json(const Graph& g);
Json coloring_json(const Coloring& c);
Json bound_report_json(const Graph& g, const BoundReport& r);
Json lovasz_json(const Graph& g, const DegreeBounds& bounds, const LovaszResult& r);
Json certificate_json(const CriticalCertificate& c);
Json refined_json(const RefinedConditionReport& r);
Json ng_record_json(const NGRecord& r);
Json witness_suite_json(const std::vector<WitnessResult>& results);
Json verify_json(const VerifyReport& r);

}  // namespace gfree
