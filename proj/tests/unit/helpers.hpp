#pragma once

#include <string>
#include <vector>

#include "hamint/complex.hpp"
#include "hamint/families.hpp"

namespace hamint::testsupport {

inline Complex cx(int n, int d, const std::vector<std::vector<Vertex>>& facets) {
  return families::from_lists(n, d, facets);
}

inline std::vector<std::string> facet_strings(const Complex& c) {
  std::vector<std::string> out;
  for (const Face& f : c.facets()) out.push_back(f.to_string());
  return out;
}

}  // namespace hamint::testsupport
