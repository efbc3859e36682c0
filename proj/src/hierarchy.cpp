#include "hamint/hierarchy.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamint {

std::string to_string(HierarchyProperty p) {
  switch (p) {
    case HierarchyProperty::closed: return "closed";
    case HierarchyProperty::unit_interval: return "unit-interval";
    case HierarchyProperty::under_closed: return "under-closed";
    case HierarchyProperty::semi_closed: return "semi-closed";
    case HierarchyProperty::weakly_closed: return "weakly-closed";
    case HierarchyProperty::chordal: return "chordal";
    case HierarchyProperty::shifted: return "shifted";
  }
  return "?";
}

HierarchyProperty hierarchy_property_from_string(const std::string& s) {
  for (HierarchyProperty p : kHierarchyProperties) {
    if (to_string(p) == s) return p;
  }
  throw RangeError("unknown property '" + s + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_with_given_labeling: return "holds-with-given-labeling";
    case Verdict::exists_witness_labeling: return "exists-witness-labeling";
    case Verdict::fails_exhaustively: return "fails-exhaustively";
  }
  return "?";
}

const PropertyVerdict& HierarchyReport::at(HierarchyProperty p) const {
  for (const auto& e : entries) {
    if (e.property == p) return e;
  }
  throw RangeError("property missing from report");
}

namespace {

/// Lexicographically first increasing sequence b with lo[j] <= b_j <= hi[j] whose
/// vertex set is missing; 0 if all are present.
template <class Contains>
VertexMask first_missing_sequence(int d, const std::vector<int>& lo, const std::vector<int>& hi, Contains&& contains) {
  VertexMask found = 0;
  auto rec = [&](auto& self, int j, int prev, VertexMask acc) -> bool {
    if (j > d) {
      if (!contains(acc)) {
        found = acc;
        return true;
      }
      return false;
    }
    for (int b = std::max(lo[j], prev + 1); b <= hi[j]; ++b) {
      if (self(self, j + 1, b, acc | vertex_bit(b))) return true;
    }
    return false;
  };
  rec(rec, 0, 0, 0);
  return found;
}

template <class Contains>
VertexMask first_missing_subset(VertexMask pool, int k, Contains&& contains) {
  for (VertexMask s : subsets_of_size(pool, k)) {
    if (!contains(s)) return s;
  }
  return 0;
}

template <class Contains>
VertexMask under_missing(const std::vector<int>& a, int d, Contains&& contains) {
  std::vector<int> lo(d + 1, a[0]), hi(a);
  return first_missing_sequence(d, lo, hi, contains);
}

template <class Contains>
VertexMask over_missing(const std::vector<int>& a, int d, Contains&& contains) {
  std::vector<int> lo(a), hi(d + 1, a[d]);
  return first_missing_sequence(d, lo, hi, contains);
}

/// Missing face for the single-facet conditions; 0 when the facet is fine.
template <class Contains>
VertexMask facet_missing(HierarchyProperty p, VertexMask f, int d, Contains&& contains) {
  std::vector<int> a = Face::from_mask(f).vertices();
  switch (p) {
    case HierarchyProperty::unit_interval: {
      std::vector<int> lo(d + 1, a[0]), hi(d + 1, a[d]);
      return first_missing_sequence(d, lo, hi, contains);
    }
    case HierarchyProperty::under_closed: return under_missing(a, d, contains);
    case HierarchyProperty::semi_closed: {
      VertexMask under = under_missing(a, d, contains);
      if (under == 0 || over_missing(a, d, contains) == 0) return 0;
      return under;
    }
    case HierarchyProperty::shifted: {
      std::vector<int> lo(d + 1, 1), hi(a);
      return first_missing_sequence(d, lo, hi, contains);
    }
    case HierarchyProperty::weakly_closed: {
      VertexMask lo_drop = f & ~vertex_bit(a[0]);
      VertexMask hi_drop = f & ~vertex_bit(a[d]);
      for (int g = a[0] + 1; g < a[d]; ++g) {
        VertexMask b = vertex_bit(g);
        if (f & b) continue;
        if (!contains(lo_drop | b) && !contains(hi_drop | b)) return b;
      }
      return 0;
    }
    default: return 0;
  }
}

bool same_position_shared(VertexMask f, VertexMask g, int d) {
  if ((f & g) == 0) return false;
  for (int i = 0; i <= d; ++i) {
    if (Face::from_mask(f).at(i) == Face::from_mask(g).at(i)) return true;
  }
  return false;
}

bool pair_applies(HierarchyProperty p, VertexMask f, VertexMask g, int d) {
  if (f == g) return false;
  if (p == HierarchyProperty::closed) return same_position_shared(f, g, d);
  return Face::from_mask(f).max() == Face::from_mask(g).max();
}

}  // namespace

PredicateResult check_labeled(const Complex& labeled, HierarchyProperty p) {
  int d = labeled.d();
  auto contains = [&](VertexMask m) { return labeled.contains_mask(m); };
  bool pairwise = p == HierarchyProperty::closed || p == HierarchyProperty::chordal;
  for (const Face& f : labeled.facets()) {
    VertexMask missing = 0;
    if (pairwise) {
      for (const Face& g : labeled.facets()) {
        if (!pair_applies(p, f.mask(), g.mask(), d)) continue;
        VertexMask m = first_missing_subset(f.mask() | g.mask(), d + 1, contains);
        if (m != 0 && (missing == 0 || lex_less(m, missing))) missing = m;
      }
    } else {
      missing = facet_missing(p, f.mask(), d, contains);
    }
    if (missing != 0) return PredicateResult{false, Violation{f, Face::from_mask(missing)}};
  }
  return PredicateResult{};
}

PredicateResult check_with(const Complex& c, const Labeling& l, HierarchyProperty p) {
  return check_labeled(relabel(c, l), p);
}

namespace {

class HierarchyPolicy {
 public:
  HierarchyPolicy(const Complex& c, HierarchyProperty p) : c_(c), p_(p), n_(c.n()), d_(c.d()) {
    for (const Face& f : c.facets()) facets_.push_back(f.mask());
    int m = static_cast<int>(facets_.size());
    containing_.assign(n_ + 1, {});
    for (int i = 0; i < m; ++i) {
      for (Vertex v : Face::from_mask(facets_[i]).vertices()) containing_[v].push_back(i);
    }
    count_.assign(m, 0);
    first_.assign(m, 0);
    label_.assign(n_ + 1, 0);
    // replace_[i*(n+1)+v]: vertices x of facet i with (F - x + v) a facet.
    replace_.assign(static_cast<std::size_t>(m) * (n_ + 1), 0);
    for (int i = 0; i < m; ++i) {
      for (Vertex v = 1; v <= n_; ++v) {
        if (facets_[i] & vertex_bit(v)) continue;
        VertexMask r = 0;
        for (VertexMask x = facets_[i]; x; x &= x - 1) {
          VertexMask xb = x & (~x + 1);
          if (c.contains_mask((facets_[i] & ~xb) | vertex_bit(v))) r |= xb;
        }
        replace_[static_cast<std::size_t>(i) * (n_ + 1) + v] = r;
      }
    }
    if (p_ == HierarchyProperty::closed || p_ == HierarchyProperty::chordal) {
      skeleton_ok_.assign(static_cast<std::size_t>(m) * m, 1);
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          bool ok = true;
          for (VertexMask s : subsets_of_size(facets_[i] | facets_[j], d_ + 1)) {
            if (!c.contains_mask(s)) {
              ok = false;
              break;
            }
          }
          skeleton_ok_[i * m + j] = skeleton_ok_[j * m + i] = ok;
        }
      }
    }
    if (p_ == HierarchyProperty::closed) build_cliques();
    pos_.assign(m, -1);
  }

  bool place(const std::vector<Vertex>& order, int pos) {
    Vertex v = order[pos];
    label_[v] = pos + 1;
    labeled_ |= vertex_bit(v);
    for (int i : containing_[v]) {
      pos_[i] = count_[i];
      if (count_[i]++ == 0) first_[i] = v;
    }
    return check(order, v);
  }

  void unplace(const std::vector<Vertex>& order, int pos) {
    Vertex v = order[pos];
    for (int i : containing_[v]) {
      if (--count_[i] == 0) first_[i] = 0;
    }
    label_[v] = 0;
    labeled_ &= ~vertex_bit(v);
  }

  bool accept(const std::vector<Vertex>&) const { return true; }

 private:
  bool check(const std::vector<Vertex>& order, Vertex v) {
    int m = static_cast<int>(facets_.size());
    if (p_ == HierarchyProperty::closed) {
      const auto& cont = containing_[v];
      for (std::size_t a = 0; a < cont.size(); ++a) {
        for (std::size_t b = a + 1; b < cont.size(); ++b) {
          if (pos_[cont[a]] == pos_[cont[b]] && !skeleton_ok_[cont[a] * m + cont[b]]) return false;
        }
      }
      if (!hall_feasible()) return false;
    }
    if (p_ == HierarchyProperty::chordal) {
      const auto& cont = containing_[v];
      for (std::size_t a = 0; a < cont.size(); ++a) {
        if (count_[cont[a]] != d_ + 1) continue;
        for (std::size_t b = a + 1; b < cont.size(); ++b) {
          if (count_[cont[b]] == d_ + 1 && !skeleton_ok_[cont[a] * m + cont[b]]) return false;
        }
      }
    }
    if (!lookahead(v)) return false;
    if (p_ == HierarchyProperty::closed || p_ == HierarchyProperty::chordal) return true;
    auto contains_labels = [&](VertexMask lm) {
      VertexMask om = 0;
      for (; lm; lm &= lm - 1) om |= vertex_bit(order[std::countr_zero(lm)]);
      return c_.contains_mask(om);
    };
    for (int i : containing_[v]) {
      if (count_[i] != d_ + 1) continue;
      VertexMask lm = 0;
      for (VertexMask x = facets_[i]; x; x &= x - 1) lm |= vertex_bit(label_[std::countr_zero(x) + 1]);
      if (facet_missing(p_, lm, d_, contains_labels) != 0) return false;
    }
    return true;
  }

  /// Label-independent necessary conditions for facets already started but not
  /// finished: v will lie strictly between their smallest and largest labels.
  bool lookahead(Vertex v) const {
    if (p_ == HierarchyProperty::closed || p_ == HierarchyProperty::chordal) return true;
    int m = static_cast<int>(facets_.size());
    for (int i = 0; i < m; ++i) {
      if (count_[i] == 0 || count_[i] == d_ + 1 || (facets_[i] & vertex_bit(v))) continue;
      VertexMask r = replace_[static_cast<std::size_t>(i) * (n_ + 1) + v];
      VertexMask open = facets_[i] & ~labeled_;
      bool ok = true;
      switch (p_) {
        case HierarchyProperty::unit_interval: ok = r == facets_[i]; break;
        case HierarchyProperty::under_closed:
        case HierarchyProperty::shifted: ok = (r & open) != 0; break;
        case HierarchyProperty::semi_closed:
        case HierarchyProperty::weakly_closed: ok = (r & (open | vertex_bit(first_[i]))) != 0; break;
        default: break;
      }
      if (!ok) return false;
    }
    return true;
  }

  void build_cliques() {
    int m = static_cast<int>(facets_.size());
    cliques_.clear();
    for (Vertex u = 1; u <= n_; ++u) {
      const auto& cont = containing_[u];
      std::vector<int> r, p(cont.begin(), cont.end()), x;
      auto conflict = [&](int a, int b) { return !skeleton_ok_[a * m + b]; };
      auto bk = [&](auto& self, std::vector<int>& R, std::vector<int> P, std::vector<int> X) -> void {
        if (P.empty() && X.empty()) {
          if (static_cast<int>(R.size()) >= 2) cliques_.push_back({u, R});
          return;
        }
        while (!P.empty()) {
          int w = P.back();
          std::vector<int> np, nx;
          for (int y : P) {
            if (y != w && conflict(w, y)) np.push_back(y);
          }
          for (int y : X) {
            if (conflict(w, y)) nx.push_back(y);
          }
          R.push_back(w);
          self(self, R, np, nx);
          R.pop_back();
          P.pop_back();
          X.push_back(w);
        }
      };
      bk(bk, r, p, x);
    }
  }

  /// Facets in a conflict clique at an unlabeled vertex need pairwise distinct
  /// positions for it, each at least the number of already labeled vertices.
  bool hall_feasible() const {
    std::vector<int> lows;
    for (const auto& [u, clique] : cliques_) {
      if (labeled_ & vertex_bit(u)) continue;
      if (static_cast<int>(clique.size()) > d_ + 1) return false;
      lows.clear();
      for (int i : clique) lows.push_back(count_[i]);
      std::sort(lows.begin(), lows.end(), std::greater<>());
      for (std::size_t t = 0; t < lows.size(); ++t) {
        if (lows[t] > d_ - static_cast<int>(t)) return false;
      }
    }
    return true;
  }

  const Complex& c_;
  HierarchyProperty p_;
  int n_, d_;
  std::vector<VertexMask> facets_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> count_;
  std::vector<Vertex> first_;
  std::vector<int> label_;
  std::vector<int> pos_;
  std::vector<VertexMask> replace_;
  std::vector<char> skeleton_ok_;
  std::vector<std::pair<Vertex, std::vector<int>>> cliques_;
  VertexMask labeled_ = 0;
};

}  // namespace

std::optional<Labeling> search_hierarchy_labeling(const Complex& c, HierarchyProperty p, const SearchOptions& opts) {
  require_within_cap(c.n(), opts);
  HierarchyPolicy policy(c, p);
  std::vector<Vertex> found;
  search_orders(c.n(), policy, [&](const std::vector<Vertex>& order) {
    found = order;
    return true;
  });
  if (found.empty()) return std::nullopt;
  Labeling l = Labeling::from_order(found);
  if (!check_with(c, l, p).holds) throw std::logic_error("search witness rejected for " + to_string(p));
  return l;
}

HierarchyReport full_report(const Complex& c, const SearchOptions& opts) {
  HierarchyReport report;
  Labeling id = Labeling::identity(c.n());
  for (HierarchyProperty p : kHierarchyProperties) {
    PredicateResult given = check_with(c, id, p);
    PropertyVerdict v{p, Verdict::holds_with_given_labeling, std::nullopt, given.violation};
    if (given.holds) {
      v.witness = id;
    } else if (auto w = search_hierarchy_labeling(c, p, opts)) {
      v.verdict = Verdict::exists_witness_labeling;
      v.witness = *w;
    } else {
      v.verdict = Verdict::fails_exhaustively;
    }
    report.entries.push_back(std::move(v));
  }
  auto implies = [&](HierarchyProperty a, HierarchyProperty b) {
    const auto& va = report.at(a);
    const auto& vb = report.at(b);
    if (va.exists() && !vb.exists()) {
      throw std::logic_error(to_string(a) + " holds but " + to_string(b) + " fails");
    }
    if (va.verdict == Verdict::holds_with_given_labeling && vb.verdict != Verdict::holds_with_given_labeling) {
      throw std::logic_error(to_string(a) + " holds with the given labeling but " + to_string(b) + " does not");
    }
  };
  implies(HierarchyProperty::unit_interval, HierarchyProperty::under_closed);
  implies(HierarchyProperty::under_closed, HierarchyProperty::semi_closed);
  implies(HierarchyProperty::semi_closed, HierarchyProperty::weakly_closed);
  implies(HierarchyProperty::shifted, HierarchyProperty::under_closed);
  return report;
}

}  // namespace hamint
