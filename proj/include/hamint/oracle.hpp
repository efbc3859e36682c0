#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hamint/hamiltonicity.hpp"
#include "hamint/hierarchy.hpp"

namespace hamint {

/// One of the four path properties or the seven hierarchy properties.
using AnyProperty = std::variant<TraceProperty, HierarchyProperty>;

std::string to_string(const AnyProperty& p);
AnyProperty any_property_from_string(const std::string& s);
const std::vector<AnyProperty>& all_properties();

inline constexpr int kOracleMaxVertices = 7;

/// Property under a fixed labeling, evaluated from the definitions without search shortcuts.
bool holds_by_definition(const Complex& c, const Labeling& l, const AnyProperty& p);

struct OracleResult {
  bool holds = false;
  long witness_count = 0;                ///< labelings with the property among all n!
  std::optional<Labeling> first_witness;  ///< smallest in vertex-order lexicographic order
};

/// Full enumeration of all n! labelings. Throws CapacityError above kOracleMaxVertices vertices.
OracleResult oracle(const Complex& c, const AnyProperty& p);

/// The pruned search for the same property (search_labeling or search_hierarchy_labeling).
std::optional<Labeling> search_any(const Complex& c, const AnyProperty& p, const SearchOptions& opts = {});

}  // namespace hamint
