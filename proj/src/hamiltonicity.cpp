#include "hamint/hamiltonicity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace hamint {

std::string to_string(PathKind k) {
  switch (k) {
    case PathKind::tight_path: return "tight-path";
    case PathKind::tight_cycle: return "tight-cycle";
    case PathKind::weak_path: return "weak-path";
    case PathKind::weak_cycle: return "weak-cycle";
  }
  return "?";
}

PathKind path_kind_from_string(const std::string& s) {
  if (s == "tight-path") return PathKind::tight_path;
  if (s == "tight-cycle") return PathKind::tight_cycle;
  if (s == "weak-path") return PathKind::weak_path;
  if (s == "weak-cycle") return PathKind::weak_cycle;
  throw RangeError("unknown certificate kind '" + s + "'");
}

std::string to_string(TraceProperty p) {
  switch (p) {
    case TraceProperty::traceable: return "traceable";
    case TraceProperty::hamiltonian: return "hamiltonian";
    case TraceProperty::weakly_traceable: return "weakly-traceable";
    case TraceProperty::weakly_hamiltonian: return "weakly-hamiltonian";
  }
  return "?";
}

PathKind kind_of(TraceProperty p) {
  switch (p) {
    case TraceProperty::traceable: return PathKind::tight_path;
    case TraceProperty::hamiltonian: return PathKind::tight_cycle;
    case TraceProperty::weakly_traceable: return PathKind::weak_path;
    case TraceProperty::weakly_hamiltonian: return PathKind::weak_cycle;
  }
  return PathKind::tight_path;
}

VertexMask window_mask(const std::vector<Vertex>& order, int d, int i) {
  int n = static_cast<int>(order.size());
  VertexMask m = 0;
  for (int k = 0; k <= d; ++k) m |= vertex_bit(order[(i - 1 + k) % n]);
  return m;
}

namespace {

/// Windows H_1..H_count present in the complex, 0-based.
std::vector<char> present_windows(const Complex& c, const std::vector<Vertex>& order, int count) {
  std::vector<char> present(count);
  for (int i = 0; i < count; ++i) present[i] = c.contains_mask(window_mask(order, c.d(), i + 1));
  return present;
}

/// Label-space vertex set of window i (0-based), cyclic.
VertexMask window_positions(int n, int d, int i) {
  VertexMask m = 0;
  for (int k = 0; k <= d; ++k) m |= vertex_bit((i + k) % n + 1);
  return m;
}

std::vector<int> greedy_chain(const std::vector<char>& present, int d) {
  int last = static_cast<int>(present.size()) - 1;
  if (last < 0 || !present[0] || !present[last]) return {};
  std::vector<int> chain{1};
  int cur = 0;
  while (cur != last) {
    int next = -1;
    for (int j = std::min(last, cur + d); j > cur; --j) {
      if (present[j]) {
        next = j;
        break;
      }
    }
    if (next < 0) return {};
    chain.push_back(next + 1);
    cur = next;
  }
  return chain;
}

/// Exhaustive search for a sequence of distinct windows (0-based indices in
/// `candidates`) with consecutive incidence and full coverage; closes the cycle when
/// `cyclic` is set. Returns 1-based indices or empty.
std::vector<int> sequence_search(int n, int d, const std::vector<int>& candidates, bool cyclic) {
  int m = static_cast<int>(candidates.size());
  if (m == 0 || m > 58) return {};
  std::vector<VertexMask> cover(m);
  for (int a = 0; a < m; ++a) cover[a] = window_positions(n, d, candidates[a]);
  VertexMask target = full_mask(n);
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> stack;
  std::uint64_t allowed = 0;
  int start = 0;
  auto rec = [&](auto& self, std::uint64_t used, VertexMask covered, int last) -> bool {
    if (covered == target && (!cyclic || (stack.size() >= 3 && (cover[last] & cover[start]) != 0))) return true;
    std::uint64_t key = (used << 6) | static_cast<std::uint64_t>(last);
    if (dead.count(key)) return false;
    for (int b = 0; b < m; ++b) {
      std::uint64_t bit = std::uint64_t{1} << b;
      if ((used & bit) || !(allowed & bit) || (cover[last] & cover[b]) == 0) continue;
      stack.push_back(b);
      if (self(self, used | bit, covered | cover[b], b)) return true;
      stack.pop_back();
    }
    dead.insert(key);
    return false;
  };
  for (start = 0; start < m; ++start) {
    // Cycles are rotated so that the smallest index comes first.
    allowed = 0;
    for (int b = 0; b < m; ++b) {
      if (!cyclic || b > start) allowed |= std::uint64_t{1} << b;
    }
    dead.clear();
    stack.assign(1, start);
    if (rec(rec, std::uint64_t{1} << start, cover[start], start)) {
      std::vector<int> out;
      for (int a : stack) out.push_back(candidates[a] + 1);
      return out;
    }
  }
  return {};
}

std::vector<int> present_list(const std::vector<char>& present) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(present.size()); ++i) {
    if (present[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> weak_cycle_indices(int n, int d, const std::vector<char>& present, bool allow_fast) {
  std::vector<int> p = present_list(present);
  if (p.empty()) return {};
  if (allow_fast) {
    bool ok = true;
    for (std::size_t a = 0; a < p.size(); ++a) {
      int next = a + 1 < p.size() ? p[a + 1] : p[0] + n;
      if (next - p[a] > d) {
        ok = false;
        break;
      }
    }
    if (ok && p.size() >= 3) {
      std::vector<int> out;
      for (int i : p) out.push_back(i + 1);
      return out;
    }
  }
  return sequence_search(n, d, p, true);
}

void require_size(const Complex& c, const Labeling& l) {
  if (l.size() != c.n()) {
    throw RangeError("labeling has " + std::to_string(l.size()) + " entries, complex has " + std::to_string(c.n()) + " vertices");
  }
}

}  // namespace

bool is_traceable_with(const Complex& c, const Labeling& l) {
  require_size(c, l);
  std::vector<Vertex> order = l.order();
  for (int i = 1; i <= c.n() - c.d(); ++i) {
    if (!c.contains_mask(window_mask(order, c.d(), i))) return false;
  }
  return c.n() > c.d();
}

bool is_hamiltonian_with(const Complex& c, const Labeling& l) {
  require_size(c, l);
  std::vector<Vertex> order = l.order();
  for (int i = 1; i <= c.n(); ++i) {
    if (!c.contains_mask(window_mask(order, c.d(), i))) return false;
  }
  return c.n() > c.d();
}

std::optional<PathCertificate> weakly_traceable_with(const Complex& c, const Labeling& l) {
  require_size(c, l);
  if (c.n() <= c.d()) return std::nullopt;
  std::vector<char> present = present_windows(c, l.order(), c.n() - c.d());
  if (std::all_of(present.begin(), present.end(), [](char x) { return x; })) {
    std::vector<int> all(present.size());
    std::iota(all.begin(), all.end(), 1);
    return PathCertificate{PathKind::weak_path, l, std::move(all)};
  }
  std::vector<int> chain = greedy_chain(present, c.d());
  if (chain.empty()) return std::nullopt;
  return PathCertificate{PathKind::weak_path, l, std::move(chain)};
}

std::optional<PathCertificate> weakly_hamiltonian_with(const Complex& c, const Labeling& l) {
  require_size(c, l);
  if (c.n() <= c.d()) return std::nullopt;
  std::vector<char> present = present_windows(c, l.order(), c.n());
  if (c.n() >= 3 && c.n() >= c.d() + 2 && std::all_of(present.begin(), present.end(), [](char x) { return x; })) {
    std::vector<int> all(present.size());
    std::iota(all.begin(), all.end(), 1);
    return PathCertificate{PathKind::weak_cycle, l, std::move(all)};
  }
  std::vector<int> idx = weak_cycle_indices(c.n(), c.d(), present, true);
  if (idx.empty()) return std::nullopt;
  return PathCertificate{PathKind::weak_cycle, l, std::move(idx)};
}

bool weak_path_by_definition(const Complex& c, const Labeling& l) {
  require_size(c, l);
  if (c.n() <= c.d()) return false;
  std::vector<char> present = present_windows(c, l.order(), c.n() - c.d());
  return !sequence_search(c.n(), c.d(), present_list(present), false).empty();
}

bool weak_cycle_by_definition(const Complex& c, const Labeling& l) {
  require_size(c, l);
  if (c.n() <= c.d()) return false;
  std::vector<char> present = present_windows(c, l.order(), c.n());
  return !weak_cycle_indices(c.n(), c.d(), present, false).empty();
}

std::optional<PathCertificate> certify_with(const Complex& c, const Labeling& l, TraceProperty p) {
  switch (p) {
    case TraceProperty::traceable: {
      if (!is_traceable_with(c, l)) return std::nullopt;
      std::vector<int> idx(c.n() - c.d());
      for (int i = 0; i < c.n() - c.d(); ++i) idx[i] = i + 1;
      return PathCertificate{PathKind::tight_path, l, idx};
    }
    case TraceProperty::hamiltonian: {
      if (!is_hamiltonian_with(c, l)) return std::nullopt;
      std::vector<int> idx(c.n());
      for (int i = 0; i < c.n(); ++i) idx[i] = i + 1;
      return PathCertificate{PathKind::tight_cycle, l, idx};
    }
    case TraceProperty::weakly_traceable: return weakly_traceable_with(c, l);
    case TraceProperty::weakly_hamiltonian: return weakly_hamiltonian_with(c, l);
  }
  return std::nullopt;
}

namespace {

class TracePolicy {
 public:
  TracePolicy(const Complex& c, TraceProperty p, bool symmetric)
      : c_(c), p_(p), symmetric_(symmetric), n_(c.n()), d_(c.d()), run_(c.n(), 0) {}

  bool place(const std::vector<Vertex>& order, int pos) {
    bool cyclic = p_ == TraceProperty::hamiltonian || p_ == TraceProperty::weakly_hamiltonian;
    if (p_ == TraceProperty::hamiltonian && symmetric_ && pos == 0 && order[0] != 1) return false;
    if (pos < d_) return true;
    int w = pos - d_;
    bool present = c_.contains_mask(window_mask(order, d_, w + 1));
    switch (p_) {
      case TraceProperty::traceable:
      case TraceProperty::hamiltonian: return present;
      case TraceProperty::weakly_traceable:
      case TraceProperty::weakly_hamiltonian: {
        if (cyclic && !symmetric_) return true;
        if (w == 0 && !present) return false;
        run_[w] = present ? 0 : (w > 0 ? run_[w - 1] : 0) + 1;
        return run_[w] < d_;
      }
    }
    return true;
  }

  void unplace(const std::vector<Vertex>&, int) {}

  bool accept(const std::vector<Vertex>& order) const {
    switch (p_) {
      case TraceProperty::traceable:
        return !symmetric_ || order.front() < order.back();
      case TraceProperty::weakly_traceable:
        return run_[n_ - d_ - 1] == 0 && (!symmetric_ || order.front() < order.back());
      case TraceProperty::hamiltonian: {
        for (int i = n_ - d_ + 1; i <= n_; ++i) {
          if (!c_.contains_mask(window_mask(order, d_, i))) return false;
        }
        return !symmetric_ || n_ < 3 || order[1] < order.back();
      }
      case TraceProperty::weakly_hamiltonian: {
        std::vector<char> present = present_windows(c_, order, n_);
        return !weak_cycle_indices(n_, d_, present, true).empty();
      }
    }
    return false;
  }

 private:
  const Complex& c_;
  TraceProperty p_;
  bool symmetric_;
  int n_, d_;
  std::vector<int> run_;
};

}  // namespace

namespace detail {

std::vector<Vertex> first_order(const Complex& c, TraceProperty p, bool symmetric, const SearchOptions& opts,
                                const std::function<bool(const std::vector<Vertex>&)>& visit) {
  require_within_cap(c.n(), opts);
  std::vector<Vertex> found;
  if (c.n() <= c.d()) return found;
  TracePolicy policy(c, p, symmetric);
  search_orders(c.n(), policy, [&](const std::vector<Vertex>& order) {
    if (visit(order)) {
      found = order;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace detail

std::optional<PathCertificate> search_labeling(const Complex& c, TraceProperty p, const SearchOptions& opts) {
  std::vector<Vertex> order = detail::first_order(c, p, true, opts, [](const std::vector<Vertex>&) { return true; });
  if (order.empty()) return std::nullopt;
  auto cert = certify_with(c, Labeling::from_order(order), p);
  if (!cert) throw std::logic_error("search witness rejected by fixed-labeling check");
  return cert;
}

bool verify_certificate(const Complex& c, const PathCertificate& cert, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  int n = c.n(), d = c.d();
  if (cert.labeling.size() != n) return fail("labeling size differs from vertex count");
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : cert.labeling.images()) {
    if (v < 1 || v > n || seen[v]) return fail("labeling is not a bijection");
    seen[v] = true;
  }
  if (n <= d) return fail("complex has too few vertices");
  bool cyclic = cert.kind == PathKind::tight_cycle || cert.kind == PathKind::weak_cycle;
  int range = cyclic ? n : n - d;
  const auto& idx = cert.indices;
  if (idx.empty()) return fail("no faces listed");
  std::vector<bool> used(range + 1, false);
  std::vector<Vertex> order = cert.labeling.order();
  for (int i : idx) {
    if (i < 1 || i > range) return fail("index " + std::to_string(i) + " out of range");
    if (used[i]) return fail("index " + std::to_string(i) + " repeated");
    used[i] = true;
    if (!c.contains_mask(window_mask(order, d, i))) return fail("H_" + std::to_string(i) + " is not a facet");
  }
  if (cert.kind == PathKind::tight_path || cert.kind == PathKind::tight_cycle) {
    if (static_cast<int>(idx.size()) != range) return fail("tight certificate must list every window");
    for (int k = 0; k < range; ++k) {
      if (idx[k] != k + 1) return fail("tight certificate indices must be 1..m in order");
    }
    return true;
  }
  VertexMask covered = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    VertexMask here = window_positions(n, d, idx[k] - 1);
    covered |= here;
    if (k > 0 && (window_positions(n, d, idx[k - 1] - 1) & here) == 0) return fail("consecutive faces do not meet");
  }
  if (covered != full_mask(n)) return fail("faces do not cover every vertex");
  if (cyclic && idx.size() < 3) return fail("a cycle needs at least three faces");
  if (cyclic && (window_positions(n, d, idx.back() - 1) & window_positions(n, d, idx.front() - 1)) == 0) {
    return fail("last face does not meet the first");
  }
  return true;
}

namespace {

/// Rotation of labels mapping label `top` to n.
Labeling rotation_to_top(int n, int top) {
  std::vector<Vertex> images(n);
  for (int x = 1; x <= n; ++x) images[x - 1] = ((x - top - 1) % n + n) % n + 1;
  return Labeling::from_images(std::move(images));
}

}  // namespace

DeletionExtract lemma_deletion_extract(const Complex& c, const PathCertificate& cycle, int j) {
  std::string why;
  if (cycle.kind != PathKind::weak_cycle) throw NotApplicable("certificate is not a weak cycle");
  if (!verify_certificate(c, cycle, &why)) throw NotApplicable("invalid weak cycle: " + why);
  int k = static_cast<int>(cycle.indices.size());
  if (j < 1 || j > k) throw RangeError("position " + std::to_string(j) + " outside 1.." + std::to_string(k));
  if (k < 3) throw NotApplicable("weak cycle has fewer than three faces");
  int n = c.n(), d = c.d();
  int here = cycle.indices[j - 1] - 1;
  int prev = cycle.indices[(j + k - 2) % k] - 1;
  int next = cycle.indices[j % k] - 1;
  VertexMask hp = window_positions(n, d, here);
  VertexMask pp = window_positions(n, d, prev);
  VertexMask np = window_positions(n, d, next);
  VertexMask only = hp & ~(pp | np);
  int m = std::popcount(only);
  Labeling rot;
  if (m > 0) {
    // The deleted labels must form a cyclic interval that is rotated to the top.
    int top = 0;
    for (int x = 1; x <= n; ++x) {
      if ((only & vertex_bit(x)) && !(only & vertex_bit(x % n + 1))) {
        if (top != 0) throw NotApplicable("vertices covered only by the chosen face are not consecutive");
        top = x;
      }
    }
    rot = rotation_to_top(n, top);
  } else if ((pp & np) == 0) {
    rot = rotation_to_top(n, next == 0 ? n : next);
  } else {
    throw NotApplicable("m_j = 0 and the neighbouring faces intersect");
  }
  Labeling full = cycle.labeling.then(rot);
  VertexMask removed = 0;
  for (Vertex u = 1; u <= n; ++u) {
    if (full(u) > n - m) removed |= vertex_bit(u);
  }
  Subcomplex sub = delete_vertices(c, removed);
  std::vector<Vertex> images;
  for (Vertex u : sub.original) images.push_back(full(u));
  Labeling induced = Labeling::from_images(std::move(images));
  auto path = weakly_traceable_with(sub.complex, induced);
  if (!path || !verify_certificate(sub.complex, *path)) {
    throw std::logic_error("deletion construction did not produce a weak path");
  }
  return DeletionExtract{std::move(sub), std::move(*path), m};
}

Complex gamma_construction(const Complex& c) {
  int n = c.n(), d = c.d();
  if (n + d > kMaxVertices) throw RangeError("gamma construction exceeds 64 vertices");
  std::vector<Face> facets = c.facets();
  VertexMask apex = 0;
  for (int k = 1; k <= d; ++k) apex |= vertex_bit(n + k);
  for (Vertex v = 1; v <= n; ++v) facets.push_back(Face::from_mask(apex | vertex_bit(v)));
  return Complex(n + d, d, std::move(facets));
}

}  // namespace hamint
