#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "hamint/face.hpp"

namespace hamint {

/// Pure d-dimensional simplicial complex on vertices 1..n, given by its facets.
///
/// Faces of smaller dimension that are maximal (produced by vertex deletion) are
/// kept separately so that purity can be reported.
class Complex {
 public:
  enum class Check { none, purity };

  Complex(int n, int d, std::vector<Face> facets, Check check = Check::none);
  Complex(int n, int d, std::vector<Face> facets, std::vector<Face> lower_maximal);

  int n() const { return n_; }
  int d() const { return d_; }
  /// Facets sorted lexicographically.
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<Face>& lower_maximal_faces() const { return lower_; }
  std::size_t size() const { return facets_.size(); }

  bool contains(const Face& f) const { return lookup_.count(f.mask()) != 0; }
  bool contains_mask(VertexMask m) const { return lookup_.count(m) != 0; }

  /// Union of the facets.
  VertexMask support() const { return support_; }
  /// Every vertex 1..n lies in a facet and no lower-dimensional face is maximal.
  bool is_pure() const { return lower_.empty() && support_ == full_mask(n_); }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.facets_ == b.facets_ && a.lower_ == b.lower_;
  }

 private:
  void build();

  int n_;
  int d_;
  std::vector<Face> facets_;
  std::vector<Face> lower_;
  std::unordered_set<VertexMask> lookup_;
  VertexMask support_ = 0;
};

/// Bijection of 1..n; maps each vertex to its new label.
class Labeling {
 public:
  Labeling() = default;
  static Labeling identity(int n);
  /// images[v-1] is the new label of v.
  static Labeling from_images(std::vector<Vertex> images);
  /// order[p] is the vertex receiving label p+1.
  static Labeling from_order(std::span<const Vertex> order);

  int size() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[v - 1]; }
  const std::vector<Vertex>& images() const { return images_; }
  /// Vertices listed by increasing new label.
  std::vector<Vertex> order() const;
  Labeling inverse() const;
  /// Apply this labeling, then `after`.
  Labeling then(const Labeling& after) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Vertex> images_;
};

Face relabel(const Face& f, const Labeling& l);
Complex relabel(const Complex& c, const Labeling& l);

/// Labeling v -> n+1-v.
Labeling reversal(int n);

Complex k_skeleton(const Complex& c, int k);

/// A complex on fewer vertices together with the original name of each new vertex.
struct Subcomplex {
  Complex complex;
  std::vector<Vertex> original;  ///< original[v-1] is the old name of new vertex v
};

/// Removes the vertices in `removed` and every facet meeting them; survivors are
/// relabeled in increasing order. Purity of the result is reported by
/// `complex.is_pure()`.
Subcomplex delete_vertices(const Complex& c, VertexMask removed);

/// Facets contained in `keep`, relabeled in increasing order.
Subcomplex induced_subcomplex(const Complex& c, VertexMask keep);

struct DualGraph {
  int nodes = 0;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::pair<int, int>> edges;
};

/// Facets adjacent iff they share d vertices. Throws PurityError on non-pure input.
DualGraph dual_graph(const Complex& c);
bool is_strongly_connected(const Complex& c);

/// Number of facets containing the (d-1)-face sigma.
int ridge_degree(const Complex& c, const Face& sigma);

struct FacetDistance {
  std::optional<int> distance;  ///< empty if no facet containing v is reachable
  bool ascending = false;       ///< some shortest path is ascending
  bool descending = false;      ///< some shortest path is descending
};

/// Shortest dual-graph distance from `facet` to a facet containing v.
FacetDistance facet_vertex_distance(const Complex& c, const Face& facet, Vertex v);

/// Text format: first line "d n", then one facet per line; '#' starts a comment.
Complex parse_complex(const std::string& text);
Complex read_complex_file(const std::string& path);
std::string format_complex(const Complex& c);

/// Comma-separated labeling images "a,b,...".
Labeling parse_labeling(const std::string& text, int n);

}  // namespace hamint
