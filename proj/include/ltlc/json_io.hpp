// JSON views of the public data structures, for --json output and batch use.
// Formulas serialize as their printed syntax; bitmask valuations expand to
// sorted state arrays.
#pragma once

#include "json.hpp"

#include "ltlc/classify.hpp"
#include "ltlc/correspondence.hpp"
#include "ltlc/oracle.hpp"

namespace ltlc {

nlohmann::json frame_json(const LassoFrame& frame);
nlohmann::json valuation_json(const Valuation& val);
// {n, succ: [...], valuation: {atom: [states]}, state, detail}
nlohmann::json counterexample_json(const Counterexample& cx);
nlohmann::json report_json(const CheckReport& report);

nlohmann::json shape_json(const LtlShapePtr& shape);
nlohmann::json shape_json(const PrimeShapePtr& shape);

nlohmann::json correspondence_json(const CorrespondenceResult& result);

} // namespace ltlc
