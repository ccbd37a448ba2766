#include "ltlc/json_io.hpp"

#include "ltlc/printer.hpp"

namespace ltlc {

using nlohmann::json;

json frame_json(const LassoFrame& frame) {
  return json{{"n", frame.n}, {"succ", frame.succ}};
}

json valuation_json(const Valuation& val) {
  json out = json::object();
  for (const auto& [atom, mask] : val) {
    std::vector<uint32_t> states;
    for (uint32_t s = 0; s < 32; ++s)
      if ((mask >> s) & 1u) states.push_back(s);
    out[atom] = states;
  }
  return out;
}

json counterexample_json(const Counterexample& cx) {
  json out = frame_json(cx.frame);
  out["valuation"] = valuation_json(cx.valuation);
  out["state"] = cx.state;
  out["detail"] = cx.detail;
  return out;
}

json report_json(const CheckReport& report) {
  json out{{"cases", report.cases}, {"ok", report.ok()}};
  out["counterexample"] =
      report.counterexample ? counterexample_json(*report.counterexample) : json(nullptr);
  return out;
}

namespace {

std::string leaf_string(const LtlPtr& f) { return print_ltl(f); }
std::string leaf_string(const PrimePtr& f) { return print_ltlprime(f); }

template <typename ShapePtr>
json shape_json_impl(const ShapePtr& shape) {
  switch (shape->kind) {
    case ShapeKind::Boxed:
      return json{{"kind", "boxed"}, {"formula", leaf_string(shape->formula)}};
    case ShapeKind::Negative:
      return json{{"kind", "negative"}, {"formula", leaf_string(shape->formula)}};
    case ShapeKind::Until:
      return json{{"kind", "until"},
                  {"guard", shape_json_impl(shape->guard)},
                  {"child", shape_json_impl(shape->child)}};
    case ShapeKind::Conj:
      return json{{"kind", "conj"},
                  {"left", shape_json_impl(shape->left)},
                  {"right", shape_json_impl(shape->right)}};
    case ShapeKind::Fx:
      return json{{"kind", "fx"}, {"var", shape->var}, {"child", shape_json_impl(shape->child)}};
    case ShapeKind::XWrap:
      return json{{"kind", "x_wrap"}, {"child", shape_json_impl(shape->child)}};
    case ShapeKind::GhatWrap:
      return json{{"kind", "ghat_wrap"},
                  {"lo", print_term(shape->lo, "@")},
                  {"hi", print_term(shape->hi, "@")},
                  {"child", shape_json_impl(shape->child)}};
  }
  return json(nullptr);
}

} // namespace

json shape_json(const LtlShapePtr& shape) { return shape_json_impl(shape); }
json shape_json(const PrimeShapePtr& shape) { return shape_json_impl(shape); }

json correspondence_json(const CorrespondenceResult& result) {
  json conjuncts = json::array();
  for (const ConjunctReport& c : result.conjuncts) {
    json assignment = json::object();
    for (const auto& [atom, def] : c.assignment.defs)
      assignment[atom] = json{{"param", def.param}, {"body", print_fo(def.body)}};
    conjuncts.push_back(json{{"untied", print_ltl(c.untied)},
                             {"translated", print_ltlprime(c.translated)},
                             {"shape", shape_json(c.shape)},
                             {"st", print_fo(c.st)},
                             {"assignment", assignment},
                             {"substituted", print_fo(c.substituted)}});
  }
  return json{{"input", print_ltl(result.input)},
              {"conjuncts", conjuncts},
              {"correspondent", print_fo(result.correspondent)},
              {"simplified", print_fo(result.simplified)}};
}

} // namespace ltlc
