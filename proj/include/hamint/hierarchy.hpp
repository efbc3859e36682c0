#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hamint/complex.hpp"
#include "hamint/search.hpp"

namespace hamint {

enum class HierarchyProperty { closed, unit_interval, under_closed, semi_closed, weakly_closed, chordal, shifted };

inline constexpr std::array<HierarchyProperty, 7> kHierarchyProperties = {
    HierarchyProperty::closed,        HierarchyProperty::unit_interval, HierarchyProperty::under_closed,
    HierarchyProperty::semi_closed,   HierarchyProperty::weakly_closed, HierarchyProperty::chordal,
    HierarchyProperty::shifted};

std::string to_string(HierarchyProperty p);
HierarchyProperty hierarchy_property_from_string(const std::string& s);

/// A facet and a face whose absence violates the property at that facet. For
/// weakly-closed the missing face is the single vertex lacking a suitable neighbour.
struct Violation {
  Face facet;
  Face missing;
};

struct PredicateResult {
  bool holds = true;
  std::optional<Violation> violation;  ///< lexicographically smallest (facet, missing face)
  explicit operator bool() const { return holds; }
};

/// Check with the vertex names of `labeled` taken as the labeling.
PredicateResult check_labeled(const Complex& labeled, HierarchyProperty p);
PredicateResult check_with(const Complex& c, const Labeling& l, HierarchyProperty p);

inline PredicateResult closed_with(const Complex& c, const Labeling& l) { return check_with(c, l, HierarchyProperty::closed); }
inline PredicateResult unit_interval_with(const Complex& c, const Labeling& l) { return check_with(c, l, HierarchyProperty::unit_interval); }
inline PredicateResult under_closed_with(const Complex& c, const Labeling& l) { return check_with(c, l, HierarchyProperty::under_closed); }
inline PredicateResult semi_closed_with(const Complex& c, const Labeling& l) { return check_with(c, l, HierarchyProperty::semi_closed); }
inline PredicateResult weakly_closed_with(const Complex& c, const Labeling& l) { return check_with(c, l, HierarchyProperty::weakly_closed); }
inline PredicateResult chordal_peo_with(const Complex& c, const Labeling& l) { return check_with(c, l, HierarchyProperty::chordal); }
inline PredicateResult shifted_with(const Complex& c, const Labeling& l) { return check_with(c, l, HierarchyProperty::shifted); }

/// First labeling in search order with the property, or nothing if none exists.
std::optional<Labeling> search_hierarchy_labeling(const Complex& c, HierarchyProperty p, const SearchOptions& opts = {});

enum class Verdict { holds_with_given_labeling, exists_witness_labeling, fails_exhaustively };

std::string to_string(Verdict v);

struct PropertyVerdict {
  HierarchyProperty property;
  Verdict verdict;
  std::optional<Labeling> witness;
  std::optional<Violation> violation;  ///< violation under the given labeling
  bool exists() const { return verdict != Verdict::fails_exhaustively; }
};

struct HierarchyReport {
  std::vector<PropertyVerdict> entries;
  const PropertyVerdict& at(HierarchyProperty p) const;
};

/// Every predicate with the given labeling, then a search where it fails. Throws
/// std::logic_error if the verdicts contradict the inclusions
/// unit-interval => under-closed => semi-closed => weakly-closed and shifted => under-closed.
HierarchyReport full_report(const Complex& c, const SearchOptions& opts = {});

}  // namespace hamint
