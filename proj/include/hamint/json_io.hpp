#pragma once

#include <json.hpp>

#include "hamint/dfi/groebner.hpp"
#include "hamint/hamiltonicity.hpp"
#include "hamint/hierarchy.hpp"
#include "hamint/oracle.hpp"
#include "hamint/theorems.hpp"

namespace hamint {

using Json = nlohmann::ordered_json;

Json to_json(const Face& f);
Json to_json(const Labeling& l);
Json to_json(const Complex& c);
/// {kind, labeling, indices}; labeling[v-1] is the new label of vertex v.
Json to_json(const PathCertificate& cert);
PathCertificate certificate_from_json(const Json& j);
Json to_json(const Violation& v);
Json to_json(const HierarchyReport& r);
Json to_json(const TheoremOutcome& t);
Json to_json(const QuasiTraceableWitness& w);
Json to_json(const BertossiReport& r);
Json to_json(const ChChChConditions& c);
Json to_json(const FacetDistance& f);
Json to_json(const OracleResult& r);

namespace dfi {

Json to_json(const Monomial& m);
Json to_json(const ShiftReport& r);
Json to_json(const InitialTerms& t);

template <class F>
Json to_json(const GBReport<F>& r) {
  Json j;
  j["is_gb"] = r.is_gb;
  j["checked_pairs"] = r.checked_pairs;
  j["skipped_coprime"] = r.skipped_coprime;
  if (r.failure) {
    j["failure"] = {{"pair", {hamint::to_json(r.failure->first), hamint::to_json(r.failure->second)}},
                    {"remainder", r.failure->remainder.to_string()}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

}  // namespace dfi

}  // namespace hamint
