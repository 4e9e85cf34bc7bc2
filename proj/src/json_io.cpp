#include "knots/json_io.hpp"

#include "knots/errors.hpp"

namespace knots {

using nlohmann::json;

json to_json(const DiagramStats& s) {
  return json{{"crossings", s.c}, {"components", s.mu}, {"writhe", s.writhe}, {"positive", s.positive}, {"connected", s.connected}};
}

DiagramStats stats_from_json(const json& j) {
  DiagramStats s;
  s.c = j.at("crossings").get<int>();
  s.mu = j.at("components").get<int>();
  s.writhe = j.at("writhe").get<int>();
  s.positive = j.at("positive").get<bool>();
  s.connected = j.at("connected").get<bool>();
  return s;
}

json to_json(const LaurentPoly& p) { return json{{"min_exp", p.min_exp}, {"coeffs", p.coeffs}}; }

LaurentPoly laurent_from_json(const json& j) {
  return LaurentPoly(j.at("min_exp").get<int>(), j.at("coeffs").get<std::vector<std::int64_t>>());
}

json to_json(const SeifertMatrix& m) { return json{{"dim", m.dim}, {"entries", m.entries}}; }

SeifertMatrix seifert_matrix_from_json(const json& j) {
  SeifertMatrix m;
  m.dim = j.at("dim").get<int>();
  m.entries = j.at("entries").get<std::vector<std::int64_t>>();
  require_internal(static_cast<int>(m.entries.size()) == m.dim * m.dim, "matrix entry count must be dim^2");
  return m;
}

json to_json(const GenusReport& g) {
  return json{{"crossings", g.c}, {"circles", g.s}, {"components", g.mu}, {"genus", g.genus}, {"euler", g.euler}};
}

GenusReport genus_from_json(const json& j) {
  GenusReport g;
  g.c = j.at("crossings").get<int>();
  g.s = j.at("circles").get<int>();
  g.mu = j.at("components").get<int>();
  g.genus = j.at("genus").get<int>();
  g.euler = j.at("euler").get<int>();
  return g;
}

json to_json(const ReconnectionBounds& b) {
  json certs = json::array();
  for (const auto& c : b.certificates) certs.push_back(json{{"kind", c.kind}, {"value", c.value}});
  json out{{"lower", b.lower}, {"upper", b.upper}, {"certificates", certs}};
  if (b.exact) out["exact"] = *b.exact;
  return out;
}

ReconnectionBounds bounds_from_json(const json& j) {
  ReconnectionBounds b;
  b.lower = j.at("lower").get<int>();
  b.upper = j.at("upper").get<int>();
  if (j.contains("exact")) b.exact = j.at("exact").get<int>();
  for (const auto& c : j.at("certificates")) {
    b.certificates.push_back(BoundCertificate{c.at("kind").get<std::string>(), c.at("value").get<int>()});
  }
  return b;
}

json to_json(const ReconnectionPlan& p) {
  return json{{"keep", p.keep}, {"smooth_order", p.smooth_order}, {"claimed_cost", p.claimed_cost}};
}

ReconnectionPlan plan_from_json(const json& j) {
  ReconnectionPlan p;
  p.keep = j.at("keep").get<std::vector<int>>();
  p.smooth_order = j.at("smooth_order").get<std::vector<int>>();
  p.claimed_cost = j.at("claimed_cost").get<int>();
  return p;
}

namespace {

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::smooth: return "smooth";
    case MoveKind::merge: return "merge";
    case MoveKind::switch_gadget: return "switch-gadget";
  }
  return "smooth";
}

MoveKind kind_from_name(const std::string& s) {
  if (s == "smooth") return MoveKind::smooth;
  if (s == "merge") return MoveKind::merge;
  if (s == "switch-gadget") return MoveKind::switch_gadget;
  fail(ErrorKind::MalformedCode, "unknown move kind '" + s + "'");
}

}  // namespace

json to_json(const CascadeTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back(json{{"kind", kind_name(s.kind)},
                         {"site", s.site},
                         {"components", s.components_after},
                         {"writhe", s.writhe_after},
                         {"crossings", s.crossings_after}});
  }
  return json{{"steps", steps},
              {"total_reconnections", t.total_reconnections},
              {"final", serialize_pd(t.final)},
              {"budget_exceeded", t.budget_exceeded}};
}

CascadeTrace trace_from_json(const json& j) {
  CascadeTrace t;
  for (const auto& s : j.at("steps")) {
    CascadeStep step;
    step.kind = kind_from_name(s.at("kind").get<std::string>());
    step.site = s.at("site").get<int>();
    step.components_after = s.at("components").get<int>();
    step.writhe_after = s.at("writhe").get<int>();
    step.crossings_after = s.at("crossings").get<int>();
    t.steps.push_back(step);
  }
  t.total_reconnections = j.at("total_reconnections").get<int>();
  t.final = parse_pd(j.at("final").get<std::string>());
  t.budget_exceeded = j.at("budget_exceeded").get<bool>();
  return t;
}

}  // namespace knots
