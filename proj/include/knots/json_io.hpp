#pragma once

#include <json.hpp>

#include "knots/braid.hpp"
#include "knots/diagram.hpp"
#include "knots/invariants.hpp"
#include "knots/laurent.hpp"
#include "knots/plan.hpp"
#include "knots/search.hpp"
#include "knots/seifert.hpp"

namespace knots {

// JSON records round-trip: every to_json output re-parses into the
// originating value. Key order is alphabetical (nlohmann::json default), so
// serialization is byte-stable.

nlohmann::json to_json(const DiagramStats& s);
DiagramStats stats_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeifertMatrix& m);
SeifertMatrix seifert_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GenusReport& g);
GenusReport genus_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ReconnectionBounds& b);
ReconnectionBounds bounds_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ReconnectionPlan& p);
ReconnectionPlan plan_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CascadeTrace& t);
CascadeTrace trace_from_json(const nlohmann::json& j);

}  // namespace knots
