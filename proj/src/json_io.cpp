#include "hamint/json_io.hpp"

namespace hamint {

Json to_json(const Face& f) { return f.vertices(); }

Json to_json(const Labeling& l) { return l.images(); }

Json to_json(const Complex& c) {
  Json facets = Json::array();
  for (const Face& f : c.facets()) facets.push_back(to_json(f));
  return {{"n", c.n()}, {"d", c.d()}, {"facets", facets}};
}

Json to_json(const PathCertificate& cert) {
  return {{"kind", to_string(cert.kind)}, {"labeling", to_json(cert.labeling)}, {"indices", cert.indices}};
}

PathCertificate certificate_from_json(const Json& j) {
  try {
    PathCertificate cert{path_kind_from_string(j.at("kind").get<std::string>()),
                         Labeling::from_images(j.at("labeling").get<std::vector<Vertex>>()),
                         j.at("indices").get<std::vector<int>>()};
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw RangeError(std::string("malformed certificate: ") + e.what());
  }
}

Json to_json(const Violation& v) { return {{"facet", to_json(v.facet)}, {"missing", to_json(v.missing)}}; }

Json to_json(const HierarchyReport& r) {
  Json j = Json::object();
  for (const auto& e : r.entries) {
    Json entry = {{"verdict", to_string(e.verdict)}};
    entry["witness"] = e.witness ? to_json(*e.witness) : Json(nullptr);
    entry["violation"] = e.violation ? to_json(*e.violation) : Json(nullptr);
    j[to_string(e.property)] = entry;
  }
  return j;
}

Json to_json(const TheoremOutcome& t) {
  Json hyps = Json::array();
  for (const auto& h : t.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  return {{"theorem", t.theorem},
          {"hypotheses_hold", t.hypotheses_hold()},
          {"hypotheses", hyps},
          {"certificate", t.certificate ? to_json(*t.certificate) : Json(nullptr)},
          {"trace", t.trace}};
}

Json to_json(const QuasiTraceableWitness& w) {
  return {{"labeling", to_json(w.labeling)}, {"j", w.j}, {"case", std::string(1, w.case_id)}};
}

Json to_json(const BertossiReport& r) {
  return {{"labeling", r.labeling ? to_json(*r.labeling) : Json(nullptr)},
          {"pure", r.pure},
          {"strongly_connected", r.strongly_connected},
          {"traceable_same_labeling", r.traceable_same_labeling},
          {"forward_holds", r.forward_holds},
          {"backward_holds", r.backward_holds},
          {"certificate", r.certificate ? to_json(*r.certificate) : Json(nullptr)}};
}

Json to_json(const ChChChConditions& c) {
  return {{"deletions_strongly_connected", c.deletions_strongly_connected},
          {"deletions_traceable", c.deletions_traceable},
          {"small_gap_faces", c.small_gap_faces}};
}

Json to_json(const FacetDistance& f) {
  return {{"distance", f.distance ? Json(*f.distance) : Json(nullptr)},
          {"ascending", f.ascending},
          {"descending", f.descending}};
}

Json to_json(const OracleResult& r) {
  return {{"holds", r.holds},
          {"witness_count", r.witness_count},
          {"first_witness", r.first_witness ? to_json(*r.first_witness) : Json(nullptr)}};
}

namespace dfi {

Json to_json(const Monomial& m) { return m.to_string(); }

Json to_json(const ShiftReport& r) {
  Json v = Json::array();
  for (const auto& s : r.violations) {
    v.push_back({{"first", hamint::to_json(s.first)},
                 {"second", hamint::to_json(s.second)},
                 {"l", s.l},
                 {"direction", s.up ? "up" : "down"},
                 {"required", hamint::to_json(s.required)},
                 {"present", s.present},
                 {"proof_polynomial_reduces", s.proof_polynomial_reduces}});
  }
  return {{"applicable", r.applicable}, {"instances", r.instances}, {"holds", r.holds()}, {"violations", v}};
}

Json to_json(const InitialTerms& t) {
  Json ms = Json::array();
  for (const auto& m : t.monomials) ms.push_back(m.to_string());
  return {{"initial_terms", ms}, {"squarefree", t.squarefree}, {"certified_initial_ideal", t.certified_initial_ideal}};
}

}  // namespace dfi

}  // namespace hamint
