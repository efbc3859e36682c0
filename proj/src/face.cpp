#include "hamint/face.hpp"

#include <algorithm>

#include "hamint/errors.hpp"

namespace hamint {

namespace {

VertexMask mask_of(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 1 || v > kMaxVertices) throw RangeError("vertex " + std::to_string(v) + " out of range 1..64");
    if (m & vertex_bit(v)) throw RangeError("repeated vertex " + std::to_string(v));
    m |= vertex_bit(v);
  }
  return m;
}

}  // namespace

Face::Face(std::initializer_list<Vertex> vertices)
    : mask_(mask_of(std::span<const Vertex>(vertices.begin(), vertices.size()))) {}

Face::Face(std::span<const Vertex> vertices) : mask_(mask_of(vertices)) {}

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (VertexMask m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Vertex Face::at(int i) const {
  VertexMask m = mask_;
  for (int k = 0; k < i; ++k) m &= m - 1;
  return std::countr_zero(m) + 1;
}

std::string Face::to_string() const {
  std::string s;
  for (Vertex v : vertices()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

int gap(const Face& facet, int d) {
  if (facet.size() != d + 1) {
    throw ArityError("face {" + facet.to_string() + "} does not have " + std::to_string(d + 1) + " vertices");
  }
  return facet.max() - facet.min() - d;
}

Face consecutive_face(int n, int d, int i) {
  if (d < 0 || d + 1 > n || n > kMaxVertices) throw RangeError("consecutive_face needs 0 <= d < n <= 64");
  if (i < 1 || i > n) throw RangeError("consecutive_face index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  VertexMask m = 0;
  for (int k = 0; k <= d; ++k) m |= vertex_bit((i - 1 + k) % n + 1);
  return Face::from_mask(m);
}

std::vector<VertexMask> subsets_of_size(VertexMask mask, int k) {
  std::vector<Vertex> vs = Face::from_mask(mask).vertices();
  std::vector<VertexMask> out;
  int m = static_cast<int>(vs.size());
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexMask s = 0;
    for (int i : idx) s |= vertex_bit(vs[i]);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace hamint
