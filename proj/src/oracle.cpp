#include "hamint/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace hamint {

std::string to_string(const AnyProperty& p) {
  return std::visit([](auto q) { return to_string(q); }, p);
}

const std::vector<AnyProperty>& all_properties() {
  static const std::vector<AnyProperty> all = [] {
    std::vector<AnyProperty> v = {TraceProperty::traceable, TraceProperty::hamiltonian,
                                  TraceProperty::weakly_traceable, TraceProperty::weakly_hamiltonian};
    for (auto h : kHierarchyProperties) v.emplace_back(h);
    return v;
  }();
  return all;
}

AnyProperty any_property_from_string(const std::string& s) {
  for (const auto& p : all_properties()) {
    if (to_string(p) == s) return p;
  }
  throw RangeError("unknown property '" + s + "'");
}

bool holds_by_definition(const Complex& c, const Labeling& l, const AnyProperty& p) {
  if (const auto* h = std::get_if<HierarchyProperty>(&p)) return check_with(c, l, *h).holds;
  switch (std::get<TraceProperty>(p)) {
    case TraceProperty::traceable: return is_traceable_with(c, l);
    case TraceProperty::hamiltonian: return is_hamiltonian_with(c, l);
    case TraceProperty::weakly_traceable: return weak_path_by_definition(c, l);
    case TraceProperty::weakly_hamiltonian: return weak_cycle_by_definition(c, l);
  }
  return false;
}

OracleResult oracle(const Complex& c, const AnyProperty& p) {
  if (c.n() > kOracleMaxVertices) {
    throw CapacityError("oracle enumeration on " + std::to_string(c.n()) + " vertices", c.n(), kOracleMaxVertices);
  }
  OracleResult r;
  std::vector<Vertex> order(c.n());
  std::iota(order.begin(), order.end(), 1);
  if (order.empty()) return r;
  do {
    Labeling l = Labeling::from_order(order);
    if (holds_by_definition(c, l, p)) {
      if (!r.first_witness) r.first_witness = l;
      ++r.witness_count;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  r.holds = r.witness_count > 0;
  return r;
}

std::optional<Labeling> search_any(const Complex& c, const AnyProperty& p, const SearchOptions& opts) {
  if (const auto* h = std::get_if<HierarchyProperty>(&p)) return search_hierarchy_labeling(c, *h, opts);
  auto cert = search_labeling(c, std::get<TraceProperty>(p), opts);
  if (!cert) return std::nullopt;
  return cert->labeling;
}

}  // namespace hamint
