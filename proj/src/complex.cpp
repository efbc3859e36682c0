#include "hamint/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hamint/errors.hpp"

namespace hamint {

namespace {

void sort_unique(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

VertexMask compress_mask(VertexMask m, const std::vector<Vertex>& new_name) {
  VertexMask out = 0;
  for (; m; m &= m - 1) out |= vertex_bit(new_name[std::countr_zero(m)]);
  return out;
}

}  // namespace

Complex::Complex(int n, int d, std::vector<Face> facets, Check check)
    : n_(n), d_(d), facets_(std::move(facets)) {
  build();
  if (check == Check::purity && !is_pure()) {
    throw PurityError("complex is not pure: some vertex of 1.." + std::to_string(n_) + " lies in no facet");
  }
}

Complex::Complex(int n, int d, std::vector<Face> facets, std::vector<Face> lower_maximal)
    : n_(n), d_(d), facets_(std::move(facets)), lower_(std::move(lower_maximal)) {
  build();
  sort_unique(lower_);
}

void Complex::build() {
  if (n_ < 0 || n_ > kMaxVertices) throw RangeError("vertex count " + std::to_string(n_) + " outside 0..64");
  if (d_ < 1) throw RangeError("dimension must be at least 1");
  sort_unique(facets_);
  for (const Face& f : facets_) {
    if (f.size() != d_ + 1) {
      throw ArityError("facet {" + f.to_string() + "} does not have " + std::to_string(d_ + 1) + " vertices");
    }
    if ((f.mask() & ~full_mask(n_)) != 0) {
      throw RangeError("facet {" + f.to_string() + "} uses a vertex above " + std::to_string(n_));
    }
    lookup_.insert(f.mask());
    support_ |= f.mask();
  }
}

Labeling Labeling::identity(int n) {
  Labeling l;
  l.images_.resize(n);
  std::iota(l.images_.begin(), l.images_.end(), 1);
  return l;
}

Labeling Labeling::from_images(std::vector<Vertex> images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : images) {
    if (v < 1 || v > n) throw RangeError("label " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[v]) throw RangeError("label " + std::to_string(v) + " used twice");
    seen[v] = true;
  }
  Labeling l;
  l.images_ = std::move(images);
  return l;
}

Labeling Labeling::from_order(std::span<const Vertex> order) {
  std::vector<Vertex> images(order.size(), 0);
  int n = static_cast<int>(order.size());
  for (int p = 0; p < n; ++p) {
    Vertex v = order[p];
    if (v < 1 || v > n || images[v - 1] != 0) throw RangeError("order is not a permutation");
    images[v - 1] = p + 1;
  }
  Labeling l;
  l.images_ = std::move(images);
  return l;
}

std::vector<Vertex> Labeling::order() const {
  std::vector<Vertex> out(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) out[images_[v] - 1] = static_cast<Vertex>(v + 1);
  return out;
}

Labeling Labeling::inverse() const {
  Labeling l;
  l.images_ = order();
  return l;
}

Labeling Labeling::then(const Labeling& after) const {
  if (after.size() != size()) throw RangeError("labelings of different sizes");
  Labeling l;
  l.images_.resize(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) l.images_[v] = after(images_[v]);
  return l;
}

Face relabel(const Face& f, const Labeling& l) {
  VertexMask out = 0;
  for (VertexMask m = f.mask(); m; m &= m - 1) out |= vertex_bit(l(std::countr_zero(m) + 1));
  return Face::from_mask(out);
}

Complex relabel(const Complex& c, const Labeling& l) {
  if (l.size() != c.n()) {
    throw RangeError("labeling has " + std::to_string(l.size()) + " entries, complex has " + std::to_string(c.n()) + " vertices");
  }
  std::vector<Face> facets;
  facets.reserve(c.size());
  for (const Face& f : c.facets()) facets.push_back(relabel(f, l));
  std::vector<Face> lower;
  for (const Face& f : c.lower_maximal_faces()) lower.push_back(relabel(f, l));
  return Complex(c.n(), c.d(), std::move(facets), std::move(lower));
}

Labeling reversal(int n) {
  std::vector<Vertex> images(n);
  for (int v = 1; v <= n; ++v) images[v - 1] = n + 1 - v;
  return Labeling::from_images(std::move(images));
}

Complex k_skeleton(const Complex& c, int k) {
  if (k < 1 || k > c.d()) throw RangeError("skeleton dimension " + std::to_string(k) + " outside 1.." + std::to_string(c.d()));
  std::vector<Face> faces;
  std::vector<Face> lower;
  for (const Face& f : c.facets()) {
    for (VertexMask s : subsets_of_size(f.mask(), k + 1)) faces.push_back(Face::from_mask(s));
  }
  for (const Face& f : c.lower_maximal_faces()) {
    if (f.size() >= k + 1) {
      for (VertexMask s : subsets_of_size(f.mask(), k + 1)) faces.push_back(Face::from_mask(s));
    } else {
      lower.push_back(f);
    }
  }
  return Complex(c.n(), k, std::move(faces), std::move(lower));
}

namespace {

Subcomplex restrict_to(const Complex& c, VertexMask keep, bool track_lower) {
  keep &= full_mask(c.n());
  std::vector<Vertex> new_name(c.n(), 0);
  std::vector<Vertex> original;
  for (Vertex v = 1; v <= c.n(); ++v) {
    if (keep & vertex_bit(v)) {
      original.push_back(v);
      new_name[v - 1] = static_cast<Vertex>(original.size());
    }
  }
  std::vector<Face> survivors;
  std::vector<VertexMask> leftovers;
  for (const Face& f : c.facets()) {
    if ((f.mask() & ~keep) == 0) {
      survivors.push_back(f);
    } else if (track_lower && (f.mask() & keep) != 0) {
      leftovers.push_back(f.mask() & keep);
    }
  }
  if (track_lower) {
    for (const Face& f : c.lower_maximal_faces()) {
      if (f.mask() & keep) leftovers.push_back(f.mask() & keep);
    }
  }
  std::vector<Face> lower;
  for (std::size_t i = 0; i < leftovers.size(); ++i) {
    VertexMask r = leftovers[i];
    bool covered = std::any_of(survivors.begin(), survivors.end(),
                               [&](const Face& f) { return (r & ~f.mask()) == 0; });
    for (std::size_t j = 0; j < leftovers.size() && !covered; ++j) {
      VertexMask o = leftovers[j];
      if (o != r && (r & ~o) == 0) covered = true;
    }
    if (!covered) lower.push_back(Face::from_mask(compress_mask(r, new_name)));
  }
  std::vector<Face> facets;
  for (const Face& f : survivors) facets.push_back(Face::from_mask(compress_mask(f.mask(), new_name)));
  int n = static_cast<int>(original.size());
  return Subcomplex{Complex(n, c.d(), std::move(facets), std::move(lower)), std::move(original)};
}

}  // namespace

Subcomplex delete_vertices(const Complex& c, VertexMask removed) {
  return restrict_to(c, full_mask(c.n()) & ~removed, true);
}

Subcomplex induced_subcomplex(const Complex& c, VertexMask keep) { return restrict_to(c, keep, false); }

DualGraph dual_graph(const Complex& c) {
  if (!c.is_pure()) throw PurityError("dual graph requires a pure complex");
  DualGraph g;
  const auto& fs = c.facets();
  g.nodes = static_cast<int>(fs.size());
  g.adjacency.assign(fs.size(), {});
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (std::popcount(fs[i].mask() & fs[j].mask()) == c.d()) {
        g.adjacency[i].push_back(static_cast<int>(j));
        g.adjacency[j].push_back(static_cast<int>(i));
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

namespace {

std::vector<int> bfs_distances(const DualGraph& g, int source) {
  std::vector<int> dist(g.nodes, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// One step replaces the smallest vertex by a vertex larger than all remaining ones.
bool ascending_step(VertexMask from, VertexMask to) {
  VertexMask out = from & ~to;
  VertexMask in = to & ~from;
  if (std::popcount(out) != 1 || std::popcount(in) != 1) return false;
  if (out != (from & (~from + 1))) return false;
  VertexMask rest = from & ~out;
  return rest == 0 || in > rest;
}

}  // namespace

bool is_strongly_connected(const Complex& c) {
  DualGraph g = dual_graph(c);
  if (g.nodes == 0) return false;
  std::vector<int> dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](int x) { return x >= 0; });
}

int ridge_degree(const Complex& c, const Face& sigma) {
  if (sigma.size() != c.d()) {
    throw ArityError("ridge {" + sigma.to_string() + "} does not have " + std::to_string(c.d()) + " vertices");
  }
  int count = 0;
  for (const Face& f : c.facets()) count += f.contains(sigma);
  return count;
}

FacetDistance facet_vertex_distance(const Complex& c, const Face& facet, Vertex v) {
  const auto& fs = c.facets();
  auto it = std::lower_bound(fs.begin(), fs.end(), facet);
  if (it == fs.end() || !(*it == facet)) throw RangeError("{" + facet.to_string() + "} is not a facet");
  if (v < 1 || v > c.n()) throw RangeError("vertex " + std::to_string(v) + " out of range");
  DualGraph g = dual_graph(c);
  int source = static_cast<int>(it - fs.begin());
  std::vector<int> dist = bfs_distances(g, source);
  FacetDistance out;
  int best = -1;
  for (int i = 0; i < g.nodes; ++i) {
    if (dist[i] >= 0 && fs[i].contains(v) && (best < 0 || dist[i] < best)) best = dist[i];
  }
  if (best < 0) return out;
  out.distance = best;
  // asc[i]/desc[i]: some shortest path from the source to i uses only ascending/descending steps.
  std::vector<int> layer_order(g.nodes);
  std::iota(layer_order.begin(), layer_order.end(), 0);
  std::stable_sort(layer_order.begin(), layer_order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
  std::vector<char> asc(g.nodes, 0), desc(g.nodes, 0);
  asc[source] = desc[source] = 1;
  for (int u : layer_order) {
    if (dist[u] < 0 || dist[u] >= best) continue;
    for (int w : g.adjacency[u]) {
      if (dist[w] != dist[u] + 1) continue;
      if (asc[u] && ascending_step(fs[u].mask(), fs[w].mask())) asc[w] = 1;
      if (desc[u] && ascending_step(fs[w].mask(), fs[u].mask())) desc[w] = 1;
    }
  }
  for (int i = 0; i < g.nodes; ++i) {
    if (dist[i] == best && fs[i].contains(v)) {
      out.ascending = out.ascending || asc[i];
      out.descending = out.descending || desc[i];
    }
  }
  return out;
}

}  // namespace hamint
