#include "hamint/families.hpp"

#include <functional>
#include <map>

#include "hamint/errors.hpp"

namespace hamint::families {

namespace {

VertexMask interval(int a, int b) {
  VertexMask m = 0;
  for (int v = a; v <= b; ++v) m |= vertex_bit(v);
  return m;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

}  // namespace

Complex from_lists(int n, int d, const std::vector<std::vector<Vertex>>& facets) {
  std::vector<Face> fs;
  for (const auto& f : facets) fs.emplace_back(std::span<const Vertex>(f));
  return Complex(n, d, std::move(fs));
}

Complex simplex_skeleton(int n, int d) {
  need(d >= 1 && d < n && n <= kMaxVertices, "simplex skeleton needs 1 <= d < n <= 64");
  std::vector<Face> fs;
  for (VertexMask s : subsets_of_size(full_mask(n), d + 1)) fs.push_back(Face::from_mask(s));
  return Complex(n, d, std::move(fs));
}

Complex ball(int d) {
  need(d >= 1, "ball needs d >= 1");
  std::vector<Face> fs;
  for (VertexMask s : subsets_of_size(interval(1, d + 2), d + 1)) fs.push_back(Face::from_mask(s));
  for (VertexMask s : subsets_of_size(interval(2, d + 3), d + 1)) fs.push_back(Face::from_mask(s));
  return Complex(d + 3, d, std::move(fs));
}

Complex sphere(int d) {
  Complex b = ball(d);
  std::vector<Face> fs;
  for (const Face& f : b.facets()) {
    if (f.mask() != interval(2, d + 2)) fs.push_back(f);
  }
  return Complex(d + 3, d, std::move(fs));
}

Complex bouquet(int d, int k) {
  need(d >= 1 && k >= 1 && 1 + k * d <= kMaxVertices, "bouquet needs d, k >= 1 and at most 64 vertices");
  int center = 1;
  for (int i = 1; i <= k && i <= d + 1; ++i) center += d - i + 1;
  int below = 1, above = center + 1;
  std::vector<Face> fs;
  for (int i = 1; i <= k; ++i) {
    int down = i <= d + 1 ? d - i + 1 : 0;
    VertexMask m = vertex_bit(center);
    for (int t = 0; t < down; ++t) m |= vertex_bit(below++);
    for (int t = 0; t < d - down; ++t) m |= vertex_bit(above++);
    fs.push_back(Face::from_mask(m));
  }
  return Complex(1 + k * d, d, std::move(fs));
}

Complex wheel(int d, int k) {
  need(d >= 1 && k >= 1 && d + k <= kMaxVertices, "wheel needs d, k >= 1");
  std::vector<Face> fs;
  for (int j = 1; j <= k; ++j) fs.push_back(Face::from_mask(interval(1, d) | vertex_bit(d + j)));
  return Complex(d + k, d, std::move(fs));
}

Complex q_complex(int d) {
  need(d >= 2, "Q^d needs d >= 2");
  VertexMask cone = interval(6, d + 3);
  std::vector<Face> fs;
  for (auto base : {Face{1, 2, 3}, Face{1, 2, 5}, Face{2, 3, 4}, Face{2, 4, 5}}) fs.push_back(Face::from_mask(base.mask() | cone));
  return Complex(d + 3, d, std::move(fs));
}

Complex annulus(int n, int d) {
  need(d >= 1 && n > d && n <= kMaxVertices, "annulus needs 1 <= d < n");
  std::vector<Face> fs;
  for (int i = 1; i <= n; ++i) fs.push_back(consecutive_face(n, d, i));
  return Complex(n, d, std::move(fs));
}

Complex suspension(int n) {
  need(n >= 3, "suspension needs n >= 3");
  std::vector<Face> fs;
  for (int v = 2; v < n; ++v) {
    fs.push_back(Face{1, v});
    fs.push_back(Face{v, n});
  }
  return Complex(n, 1, std::move(fs));
}

Complex delta4(int n, int d) {
  Complex s = simplex_skeleton(n, d);
  std::vector<Face> fs;
  for (const Face& f : s.facets()) {
    bool removed = false;
    for (int i = n - d + 1; i <= n; ++i) removed = removed || f == consecutive_face(n, d, i);
    if (!removed) fs.push_back(f);
  }
  return Complex(n, d, std::move(fs));
}

Complex tight_path(int n, int d) {
  need(d >= 1 && n > d, "tight path needs 1 <= d < n");
  std::vector<Face> fs;
  for (int i = 1; i <= n - d; ++i) fs.push_back(consecutive_face(n, d, i));
  return Complex(n, d, std::move(fs));
}

Complex small_gap_faces(int n, int d) {
  Complex s = simplex_skeleton(n, d);
  std::vector<Face> fs;
  for (const Face& f : s.facets()) {
    if (gap(f, d) <= d) fs.push_back(f);
  }
  return Complex(n, d, std::move(fs));
}

Complex disjoint_simplices(int k, int d) {
  int n = k * (d + 1);
  need(k >= 1 && d >= 1 && n <= kMaxVertices, "disjoint simplices exceed 64 vertices");
  std::vector<Face> fs;
  for (int t = 0; t < k; ++t) fs.push_back(consecutive_face(n, d, t * (d + 1) + 1));
  return Complex(n, d, std::move(fs));
}

Complex traceable_not_connected(int d) {
  int n = d * d + d + 1;
  need(d >= 1 && n <= kMaxVertices, "traceable_not_connected needs small d");
  std::vector<Face> fs;
  for (int i = 1; i <= d * d + 1; ++i) fs.push_back(consecutive_face(n, d, i));
  VertexMask g = 0;
  for (int t = 0; t <= d; ++t) g |= vertex_bit(1 + t * (d + 1));
  fs.push_back(Face::from_mask(g));
  return Complex(n, d, std::move(fs));
}

Complex cycle_complement(int k) {
  int n = 2 * k;
  need(k >= 2, "cycle complement needs k >= 2");
  std::vector<Face> fs;
  for (VertexMask e : subsets_of_size(full_mask(n), 2)) {
    Face f = Face::from_mask(e);
    int diff = f.max() - f.min();
    if (diff != 1 && diff != n - 1) fs.push_back(f);
  }
  return Complex(n, 1, std::move(fs));
}

namespace {

const std::map<std::string, std::function<Complex()>>& examples() {
  static const std::map<std::string, std::function<Complex()>> table = {
      {"delta0", [] { return from_lists(6, 2, {{1, 2, 3}, {1, 5, 6}, {3, 4, 5}}); }},
      {"delta1", [] {
         return from_lists(9, 2, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {6, 7, 8}, {7, 8, 9}, {1, 8, 9}, {1, 2, 9}, {1, 4, 7}});
       }},
      {"delta1-trouble", [] { return from_lists(9, 2, {{1, 2, 6}, {2, 3, 4}, {4, 5, 6}, {4, 8, 9}, {6, 7, 8}}); }},
      {"delta2", [] {
         std::vector<std::vector<Vertex>> fs = {{1, 2, 6}, {2, 3, 4}, {4, 5, 6}, {4, 8, 9}, {6, 7, 8}};
         std::vector<std::vector<Vertex>> cone;
         for (const auto& f : fs) {
           cone.push_back({f[0], f[1], 10});
           cone.push_back({f[0], f[2], 10});
           cone.push_back({f[1], f[2], 10});
         }
         for (auto& c : cone) fs.push_back(c);
         std::vector<Face> faces;
         for (const auto& f : fs) faces.emplace_back(std::span<const Vertex>(f));
         return Complex(10, 2, std::move(faces));
       }},
      {"delta3", [] { return from_lists(10, 3, {{1, 2, 3, 4}, {2, 3, 4, 5}, {5, 6, 7, 8}, {1, 6, 7, 10}, {1, 8, 9, 10}}); }},
      {"delta6", [] { return from_lists(9, 2, {{1, 2, 3}, {2, 3, 4}, {5, 6, 7}, {6, 7, 8}, {7, 8, 9}}); }},
      {"delta6-plus", [] {
         return from_lists(9, 2, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {6, 7, 8}, {7, 8, 9}});
       }},
      {"delta7", [] {
         Complex s = simplex_skeleton(5, 2);
         std::vector<Face> fs;
         for (const Face& f : s.facets()) {
           if (!(f == Face{1, 2, 3}) && !(f == Face{1, 2, 4})) fs.push_back(f);
         }
         return Complex(5, 2, std::move(fs));
       }},
      {"w", [] {
         return from_lists(11, 2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}, {5, 6, 8}, {7, 8, 9}, {8, 10, 11}});
       }},
      {"g0", [] { return from_lists(4, 1, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}); }},
      {"g5", [] { return from_lists(5, 1, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}); }},
      {"claw", [] { return from_lists(4, 1, {{1, 2}, {1, 3}, {1, 4}}); }},
      {"c4", [] { return from_lists(4, 1, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }},
      {"p4", [] { return from_lists(4, 1, {{1, 2}, {2, 3}, {3, 4}}); }},
      {"sigma-gh", [] { return from_lists(7, 2, {{1, 2, 3}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}, {3, 4, 7}, {3, 5, 6}, {4, 5, 6}}); }},
      {"sigma-peo", [] { return from_lists(7, 2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {1, 6, 7}, {2, 3, 4}, {2, 4, 6}}); }},
      {"sigma-prime", [] { return from_lists(5, 2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}}); }},
      {"notradical", [] { return from_lists(5, 2, {{1, 2, 4}, {1, 4, 5}, {2, 3, 4}, {3, 4, 5}}); }},
      {"uc-not-chordal", [] { return from_lists(5, 2, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {2, 3, 5}}); }},
      {"u23", [] { return bouquet(2, 3); }},
      {"u34", [] { return bouquet(3, 4); }},
      {"b2", [] { return ball(2); }},
      {"s2", [] { return sphere(2); }},
      {"q2", [] { return q_complex(2); }},
      {"a27", [] { return annulus(7, 2); }},
      {"c6-complement", [] { return cycle_complement(3); }},
      {"delta23", [] { return wheel(2, 3); }},
  };
  return table;
}

}  // namespace

Complex example(const std::string& name) {
  auto it = examples().find(name);
  if (it == examples().end()) throw RangeError("unknown example '" + name + "'");
  return it->second();
}

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : examples()) out.push_back(k);
  return out;
}

namespace {

struct Generator {
  int arity;
  std::string params;
  std::function<Complex(const std::vector<int>&)> make;
};

const std::map<std::string, Generator>& generators() {
  static const std::map<std::string, Generator> table = {
      {"simplex", {2, "n d", [](const auto& p) { return simplex_skeleton(p[0], p[1]); }}},
      {"ball", {1, "d", [](const auto& p) { return ball(p[0]); }}},
      {"sphere", {1, "d", [](const auto& p) { return sphere(p[0]); }}},
      {"bouquet", {2, "d k", [](const auto& p) { return bouquet(p[0], p[1]); }}},
      {"wheel", {2, "d k", [](const auto& p) { return wheel(p[0], p[1]); }}},
      {"q", {1, "d", [](const auto& p) { return q_complex(p[0]); }}},
      {"annulus", {2, "n d", [](const auto& p) { return annulus(p[0], p[1]); }}},
      {"suspension", {1, "n", [](const auto& p) { return suspension(p[0]); }}},
      {"delta4", {2, "n d", [](const auto& p) { return delta4(p[0], p[1]); }}},
      {"tight-path", {2, "n d", [](const auto& p) { return tight_path(p[0], p[1]); }}},
      {"small-gap", {2, "n d", [](const auto& p) { return small_gap_faces(p[0], p[1]); }}},
      {"disjoint", {2, "k d", [](const auto& p) { return disjoint_simplices(p[0], p[1]); }}},
      {"traceable-not-connected", {1, "d", [](const auto& p) { return traceable_not_connected(p[0]); }}},
      {"cycle-complement", {1, "k", [](const auto& p) { return cycle_complement(p[0]); }}},
  };
  return table;
}

}  // namespace

Complex make(const std::string& name, const std::vector<int>& params) {
  auto it = generators().find(name);
  if (it != generators().end()) {
    if (static_cast<int>(params.size()) != it->second.arity) {
      throw RangeError("family '" + name + "' takes parameters: " + it->second.params);
    }
    return it->second.make(params);
  }
  if (!params.empty()) throw RangeError("example '" + name + "' takes no parameters");
  return example(name);
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& [k, g] : generators()) out.push_back(k + " " + g.params);
  for (const auto& k : example_names()) out.push_back(k);
  return out;
}

}  // namespace hamint::families
