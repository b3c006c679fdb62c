#include "braidscope/report_json.hpp"

namespace braidscope {

using nlohmann::json;

json to_json(const Witness& w) { return {{"kind", w.kind}, {"parts", w.parts}, {"detail", w.detail}}; }

json to_json(const HomologySummary& h) {
  json groups = json::array();
  for (const auto& g : h.groups)
    groups.push_back({{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", to_string(g)}});
  return {{"groups", groups}, {"euler_characteristic", h.euler_characteristic()}, {"torsion_free", h.torsion_free()}};
}

json to_json(const PeripheralReport& r) {
  return {{"valid", r.valid},
          {"all_proper", r.all_proper},
          {"failed_condition", r.failed_condition},
          {"detail", r.detail},
          {"conclusion", r.conclusion}};
}

namespace {

json oracle_json(const OracleCheck& c) {
  json out = {{"note", c.note}};
  out["agrees"] = c.agrees ? json(*c.agrees) : json(nullptr);
  return out;
}

}  // namespace

json to_json(const ClassificationReport& r) {
  json assignments = json::array();
  for (const auto& a : r.assignments) {
    json witnesses = json::array();
    for (const auto& w : a.witnesses) witnesses.push_back(to_json(w));
    assignments.push_back({{"particles_per_component", a.assignment.counts},
                           {"trivial", a.trivial},
                           {"infinite_cyclic", a.infinite_cyclic},
                           {"hyperbolic", a.hyperbolic},
                           {"toral_rel_hyp", a.toral_rel_hyp},
                           {"contains_F2", a.contains_F2},
                           {"contains_F2xZ", a.contains_F2xZ},
                           {"acyl_hyp_status", to_string(a.acyl_status)},
                           {"free_certificate", a.free.free ? "free" : "unknown"},
                           {"free_reason", a.free.reason},
                           {"witnesses", witnesses}});
  }
  json out = {{"fingerprint", r.fingerprint},
              {"particles", r.particles},
              {"connected", r.connected},
              {"assignments", assignments},
              {"oracles", {{"hyperbolic", oracle_json(r.hyperbolic_oracle)}, {"toral_rel_hyp", oracle_json(r.toral_oracle)}}},
              {"inconsistencies", r.inconsistencies}};
  if (r.connected)
    out["shape"] = {{"kind", std::string(to_string(r.shape.kind))},
                    {"arms", r.shape.arms},
                    {"cycles", r.shape.cycles},
                    {"rays", r.shape.rays},
                    {"centers", r.shape.centers}};
  out["homology"] = r.homology ? to_json(*r.homology) : json(nullptr);
  out["homology_note"] = r.homology_note;
  return out;
}

json build_summary(const CubeComplex& x, const std::vector<Hyperplane>& hyperplanes) {
  json per_color = json::object();
  const auto& g = x.graph();
  for (const auto& h : hyperplanes) {
    auto& slot = per_color[g.edge_name(h.color)];
    slot = slot.is_null() ? 1 : slot.get<int>() + 1;
  }
  json out = {{"particles", x.particles()},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"f_vector", x.f_vector()},
              {"components", x.component_count()},
              {"hyperplanes", hyperplanes.size()},
              {"hyperplanes_per_color", per_color}};
  if (x.is_full()) out["euler_characteristic"] = euler_characteristic(x);
  return out;
}

json envelope(const std::string& task, json body) {
  body["schema_version"] = kReportSchemaVersion;
  body["task"] = task;
  return body;
}

}  // namespace braidscope
