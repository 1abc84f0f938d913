#include "ramseyforge/certificates.hpp"

namespace rf {

Json node_to_json(const Space& space, const Approx& s) {
  if (space.kind() == Space::Kind::ellentuck) return Json(s);
  Json out = Json::array();
  for (Code block : s) {
    Json elems = Json::array();
    for (uint64_t e = 0; e < 64; ++e)
      if (block & (uint64_t{1} << e)) elems.push_back(e);
    out.push_back(std::move(elems));
  }
  return out;
}

Json check_report_to_json(const CheckReport& report) {
  Json checks = Json::array();
  for (const AxiomCheckEntry& e : report.entries) {
    Json entry;
    entry["axiom"] = e.axiom;
    entry["name"] = e.name;
    entry["status"] = e.pass ? "pass" : "fail";
    entry["cases"] = e.cases;
    if (!e.pass) entry["witness"] = e.witness;
    checks.push_back(std::move(entry));
  }
  Json out;
  out["space"] = report.space;
  out["ground"] = report.ground;
  out["depth"] = report.depth;
  out["trials"] = report.trials;
  out["all_pass"] = report.all_pass();
  out["checks"] = std::move(checks);
  return out;
}

Json validation_to_json(const Space& space, const ValidationReport& report) {
  Json out;
  out["verdict"] = std::string(to_string(report.verdict));
  out["nodes_checked"] = report.nodes_checked;
  if (report.witness) out["witness"] = node_to_json(space, *report.witness);
  return out;
}

Json certificate(const std::string& kind, Json params, Json result) {
  Json doc;
  doc["schema"] = 1;
  doc["kind"] = kind;
  doc["params"] = std::move(params);
  doc["result"] = std::move(result);
  return doc;
}

std::string dump_certificate(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace rf
