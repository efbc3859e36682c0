#pragma once

#include <string>
#include <vector>

#include "hamint/complex.hpp"

namespace hamint::families {

/// Build a complex from explicit facet vertex lists.
Complex from_lists(int n, int d, const std::vector<std::vector<Vertex>>& facets);

/// d-skeleton of the (n-1)-simplex.
Complex simplex_skeleton(int n, int d);
/// d-skeleton of two (d+1)-simplices glued along a d-face, on d+3 vertices.
Complex ball(int d);
/// Ball minus the interior face {2..d+2}.
Complex sphere(int d);
/// k d-simplices sharing exactly one vertex.
Complex bouquet(int d, int k);
/// Join of the (d-1)-simplex {1..d} with k points d+1..d+k.
Complex wheel(int d, int k);
/// Q^2 = 123,125,234,245, coned d-2 times with new vertices 6, 7, ...
Complex q_complex(int d);
/// Cyclic faces H_1..H_n.
Complex annulus(int n, int d);
/// Graph suspension of n-2 isolated points with apices 1 and n.
Complex suspension(int n);
/// simplex_skeleton(n, d) minus H_{n-d+1}..H_n.
Complex delta4(int n, int d);
/// H_1..H_{n-d}.
Complex tight_path(int n, int d);
/// Every face of gap at most d.
Complex small_gap_faces(int n, int d);
/// k disjoint d-simplices H_1, H_{d+2}, H_{2d+3}, ...
Complex disjoint_simplices(int k, int d);
/// H_1..H_{d^2+1} plus {1, d+2, 2d+3, ..., d^2+d+1}.
Complex traceable_not_connected(int d);
/// Complement of the cycle graph C_{2k}.
Complex cycle_complement(int k);

/// Named examples; throws RangeError for unknown names.
Complex example(const std::string& name);
std::vector<std::string> example_names();

/// Parametrized lookup used by the command line: name plus integer parameters.
Complex make(const std::string& name, const std::vector<int>& params);
std::vector<std::string> family_names();

}  // namespace hamint::families
