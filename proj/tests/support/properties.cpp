#include "properties.hpp"

#include <random>

#include "corpus.hpp"
#include "hamint/hierarchy.hpp"

namespace hamint::testsupport {

namespace {

using HP = HierarchyProperty;

long long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

bool has_window(const Complex& lab, int i) { return lab.contains(consecutive_face(lab.n(), lab.d(), i)); }

}  // namespace

std::vector<std::string> structural_violations(const Complex& c, const Labeling& l) {
  std::vector<std::string> out;
  Complex lab = relabel(c, l);
  auto holds = [&](const Complex& x, HP p) { return check_labeled(x, p).holds; };
  auto fail = [&](const std::string& what) { out.push_back(what + " on " + format_complex(lab)); };

  bool closed = holds(lab, HP::closed), unit = holds(lab, HP::unit_interval), under = holds(lab, HP::under_closed);
  bool semi = holds(lab, HP::semi_closed), weakly = holds(lab, HP::weakly_closed);
  bool chordal = holds(lab, HP::chordal), shifted = holds(lab, HP::shifted);

  if (unit && !under) fail("unit-interval without under-closed");
  if (under && !semi) fail("under-closed without semi-closed");
  if (semi && !weakly) fail("semi-closed without weakly-closed");
  if (closed && !chordal) fail("closed without chordal");
  if (shifted && !under) fail("shifted without under-closed");
  if (chordal && semi && !under) fail("chordal and semi-closed without under-closed");

  for (int k = 1; k < c.d(); ++k) {
    Complex sk = k_skeleton(lab, k);
    for (HP p : {HP::unit_interval, HP::under_closed, HP::semi_closed, HP::weakly_closed}) {
      if (holds(lab, p) && !holds(sk, p)) fail(to_string(p) + " lost by the " + std::to_string(k) + "-skeleton");
    }
  }

  for (int size = 1; size <= 2; ++size) {
    for (VertexMask s : subsets_of_size(full_mask(c.n()), size)) {
      Complex del = delete_vertices(lab, s).complex;
      if (!del.is_pure() || del.size() == 0) continue;
      for (HP p : {HP::unit_interval, HP::under_closed, HP::semi_closed}) {
        if (holds(lab, p) && !holds(del, p)) fail(to_string(p) + " lost by deleting " + Face::from_mask(s).to_string());
      }
    }
  }

  int k = 0;
  for (Vertex v = 1; v <= c.n(); ++v) {
    int deg = 0;
    for (const Face& f : lab.facets()) deg += f.contains(v);
    k = std::max(k, deg);
  }
  for (const Face& f : lab.facets()) {
    int g = gap(f, c.d());
    if (weakly && g > 2 * k - 2) fail("weakly-closed facet gap above 2k-2");
    if (semi && g > k - 1) fail("semi-closed facet gap above k-1");
    if (unit && binomial(g + c.d(), c.d()) > k) fail("unit-interval facet gap above the binomial bound");
    if (semi && !has_window(lab, f.min()) && !has_window(lab, f.max() - c.d())) {
      fail("semi-closed facet " + f.to_string() + " without H_min or H_(max-d)");
    }
  }
  if (under && c.size() > 0 && !has_window(lab, 1)) fail("under-closed without H_1");
  if (weakly && c.size() > 0) {
    bool any = false;
    for (int i = 1; i <= c.n() - c.d(); ++i) any = any || has_window(lab, i);
    if (!any) fail("weakly-closed without any window");
  }

  if (unit && lab.is_pure()) {
    for (const Face& f : lab.facets()) {
      for (Vertex v = 1; v <= c.n(); ++v) {
        FacetDistance dist = facet_vertex_distance(lab, f, v);
        if (!dist.distance) continue;
        if (f.min() < v && v < f.max() && *dist.distance > 1) {
          fail("inner vertex " + std::to_string(v) + " far from " + f.to_string());
        }
      }
    }
  }
  return out;
}

std::vector<Labeling> interesting_labelings(const Complex& c, int random_count, std::uint64_t seed) {
  std::vector<Labeling> out{Labeling::identity(c.n())};
  for (HP p : kHierarchyProperties) {
    if (auto w = search_hierarchy_labeling(c, p)) out.push_back(*w);
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_count; ++t) out.push_back(random_labeling(c.n(), rng));
  return out;
}

}  // namespace hamint::testsupport
