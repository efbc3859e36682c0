#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hamint {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask vertex_bit(Vertex v) { return VertexMask{1} << (v - 1); }

/// Mask of the vertices 1..n.
inline constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Lexicographic order on equal-size vertex sets, compared as increasing sequences.
inline bool lex_less(VertexMask a, VertexMask b) {
  if (a == b) return false;
  VertexMask diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

/// A simplex stored as a set of vertices in 1..64.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  explicit Face(std::span<const Vertex> vertices);

  static Face from_mask(VertexMask mask) {
    Face f;
    f.mask_ = mask;
    return f;
  }

  VertexMask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  Vertex min() const { return std::countr_zero(mask_) + 1; }
  Vertex max() const { return 64 - std::countl_zero(mask_); }
  bool contains(Vertex v) const { return (mask_ & vertex_bit(v)) != 0; }
  bool contains(const Face& other) const { return (other.mask_ & ~mask_) == 0; }

  /// Vertices in increasing order.
  std::vector<Vertex> vertices() const;
  /// The i-th smallest vertex, 0-based.
  Vertex at(int i) const;

  Face with(Vertex v) const { return from_mask(mask_ | vertex_bit(v)); }
  Face without(Vertex v) const { return from_mask(mask_ & ~vertex_bit(v)); }

  std::string to_string() const;

  friend bool operator==(const Face&, const Face&) = default;
  friend bool operator<(const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a.mask_, b.mask_);
  }

 private:
  VertexMask mask_ = 0;
};

/// max F - min F - d for a facet of a d-dimensional complex.
int gap(const Face& facet, int d);

/// The d-face of d+1 cyclically consecutive vertices starting at i, modulo n.
Face consecutive_face(int n, int d, int i);

/// All k-element subsets of mask, in lexicographic order.
std::vector<VertexMask> subsets_of_size(VertexMask mask, int k);

}  // namespace hamint
