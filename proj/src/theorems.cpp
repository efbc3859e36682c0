#include "hamint/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamint {

bool TheoremOutcome::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const HypothesisCheck& h) { return h.holds; });
}

const HypothesisCheck* TheoremOutcome::hypothesis(const std::string& name) const {
  for (const auto& h : hypotheses) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

namespace {

using Order = std::vector<Vertex>;

VertexMask interval_mask(int a, int b) {
  VertexMask m = 0;
  for (int v = a; v <= b; ++v) m |= vertex_bit(v);
  return m;
}

void append_up(Order& o, int a, int b) {
  for (int v = a; v <= b; ++v) o.push_back(v);
}

void append_down(Order& o, int a, int b) {
  for (int v = a; v >= b; --v) o.push_back(v);
}

Order identity_order(int n) {
  Order o;
  append_up(o, 1, n);
  return o;
}

std::string order_text(const Order& o) {
  std::string s;
  for (Vertex v : o) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

Order reverse_names(const Order& o, int n) {
  Order out;
  for (Vertex v : o) out.push_back(n + 1 - v);
  return out;
}

/// Apply `l`, then give the vertex at position p of `order` the label p+1.
Labeling compose_order(const Labeling& l, const Order& order) { return l.then(Labeling::from_order(order)); }

std::string degrees_text(int ds, int dt, int bound) {
  return "d_sigma=" + std::to_string(ds) + " d_tau=" + std::to_string(dt) + " sum=" + std::to_string(ds + dt) +
         " bound=" + std::to_string(bound);
}

struct Construction {
  Order order;
  std::string description;
};

/// Weak-cycle constructions on a traceable complex whose labels are already applied.
std::optional<Construction> ore_construction(const Complex& lab) {
  int n = lab.n(), d = lab.d();
  VertexMask sigma = interval_mask(1, d);
  VertexMask tau = interval_mask(n - d + 1, n);
  for (int i = d + 2; i <= n - d; ++i) {
    if (lab.contains_mask(sigma | vertex_bit(i)) && lab.contains_mask(vertex_bit(i - 1) | tau)) {
      Order o;
      append_up(o, 1, i - 1);
      append_down(o, n, i);
      return Construction{o, "S_i and T_i present for i=" + std::to_string(i) + "; order " + order_text(o)};
    }
  }
  if (lab.contains_mask(sigma | vertex_bit(n))) return Construction{identity_order(n), "sigma*n present; labeling kept"};
  if (lab.contains_mask(vertex_bit(1) | tau)) return Construction{identity_order(n), "1*tau present; labeling kept"};
  return std::nullopt;
}

/// Runs the construction on `l` and re-derives the certificate with the fixed-labeling check.
std::optional<PathCertificate> realize(const Complex& c, const Labeling& l, const Construction& k, TraceProperty p,
                                       TheoremOutcome& out) {
  Labeling full = compose_order(l, k.order);
  auto cert = certify_with(c, full, p);
  std::string why;
  if (!cert || !verify_certificate(c, *cert, &why)) {
    throw std::logic_error(out.theorem + ": construction '" + k.description + "' did not yield a certificate");
  }
  out.trace.push_back(k.description);
  return cert;
}

HypothesisCheck traceable_hypothesis(const Complex& c, const Labeling& l) {
  bool t = is_traceable_with(c, l);
  return {"traceable", t, t ? "H_1..H_{n-d} present" : "some H_i with i <= n-d is missing"};
}

HypothesisCheck size_hypothesis(const Complex& c) {
  bool ok = c.n() > 2 * c.d();
  return {"n>2d", ok, "n=" + std::to_string(c.n()) + " d=" + std::to_string(c.d())};
}

void run_ore_construction(const Complex& c, const Labeling& l, TheoremOutcome& out) {
  if (!is_traceable_with(c, l)) return;
  Complex lab = relabel(c, l);
  if (auto k = ore_construction(lab)) out.certificate = realize(c, l, *k, TraceProperty::weakly_hamiltonian, out);
}

}  // namespace

std::vector<Face> ridges(const Complex& c) {
  std::vector<Face> out;
  for (const Face& f : c.facets()) {
    for (VertexMask s : subsets_of_size(f.mask(), c.d())) out.push_back(Face::from_mask(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<int, int> end_ridge_degrees(const Complex& c, const Labeling& l) {
  Order o = l.order();
  int n = c.n(), d = c.d();
  Face sigma = Face(std::span<const Vertex>(o.data(), d));
  Face tau = Face(std::span<const Vertex>(o.data() + n - d, d));
  return {ridge_degree(c, sigma), ridge_degree(c, tau)};
}

TheoremOutcome ore_weak_hamiltonian(const Complex& c, const Labeling& l) {
  TheoremOutcome out{"ore", {}, std::nullopt, {}};
  out.hypotheses.push_back(traceable_hypothesis(c, l));
  out.hypotheses.push_back(size_hypothesis(c));
  auto [ds, dt] = end_ridge_degrees(c, l);
  out.hypotheses.push_back({"ridge-degree-sum", ds + dt >= c.n(), degrees_text(ds, dt, c.n())});
  run_ore_construction(c, l, out);
  return out;
}

TheoremOutcome ore_disjoint_ridges(const Complex& c, const Labeling& l) {
  TheoremOutcome out{"ore-disjoint-ridges", {}, std::nullopt, {}};
  out.hypotheses.push_back(traceable_hypothesis(c, l));
  out.hypotheses.push_back(size_hypothesis(c));
  std::vector<Face> rs = ridges(c);
  std::vector<int> deg;
  for (const Face& r : rs) deg.push_back(ridge_degree(c, r));
  int worst = -1;
  std::string where = "no disjoint ridge pair";
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = a + 1; b < rs.size(); ++b) {
      if (rs[a].mask() & rs[b].mask()) continue;
      if (worst < 0 || deg[a] + deg[b] < worst) {
        worst = deg[a] + deg[b];
        where = "{" + rs[a].to_string() + "} and {" + rs[b].to_string() + "} sum=" + std::to_string(worst);
      }
    }
  }
  out.hypotheses.push_back({"disjoint-ridge-sums", worst < 0 || worst >= c.n(), where + " bound=" + std::to_string(c.n())});
  run_ore_construction(c, l, out);
  return out;
}

TheoremOutcome dirac_check(const Complex& c, const Labeling& l) {
  TheoremOutcome out{"dirac", {}, std::nullopt, {}};
  out.hypotheses.push_back(traceable_hypothesis(c, l));
  out.hypotheses.push_back(size_hypothesis(c));
  int lowest = -1;
  std::string where;
  for (const Face& r : ridges(c)) {
    int dr = ridge_degree(c, r);
    if (lowest < 0 || dr < lowest) {
      lowest = dr;
      where = "{" + r.to_string() + "}";
    }
  }
  out.hypotheses.push_back({"min-ridge-degree", 2 * lowest >= c.n(),
                            "min degree " + std::to_string(lowest) + " at " + where + ", n=" + std::to_string(c.n())});
  run_ore_construction(c, l, out);
  return out;
}

namespace {

Order flip_order(int n, int i) {
  Order o;
  append_down(o, i - 1, 1);
  append_up(o, i, n);
  return o;
}

int end_sum(const Complex& c, const Labeling& l) {
  auto [a, b] = end_ridge_degrees(c, l);
  return a + b;
}

}  // namespace

TheoremOutcome posa_weak_hamiltonian(const Complex& c, const PosaOptions& opts) {
  TheoremOutcome out{"posa", {}, std::nullopt, {}};
  int n = c.n(), d = c.d();
  require_within_cap(n, opts.search);
  auto start = search_labeling(c, TraceProperty::traceable, opts.search);
  out.hypotheses.push_back({"traceable", start.has_value(), start ? "traceable labeling found" : "no traceable labeling"});
  out.hypotheses.push_back(size_hypothesis(c));

  std::optional<Labeling> weak_not_tight;
  for_each_witness(
      c, TraceProperty::weakly_traceable,
      [&](const Labeling& l) {
        if (is_traceable_with(c, l)) return false;
        weak_not_tight = l;
        return true;
      },
      opts.search);
  out.hypotheses.push_back({"weakly-traceable-labelings-are-traceable", !weak_not_tight.has_value(),
                            weak_not_tight ? "a weakly-traceable labeling is not traceable" : "checked by enumeration"});

  std::vector<int> deg;
  for (const Face& r : ridges(c)) deg.push_back(ridge_degree(c, r));
  std::sort(deg.begin(), deg.end());
  bool degree_ok = true;
  std::string degree_detail = "sorted ridge degrees satisfy d_{k-d+1} > k";
  for (int k = d; 2 * k < n; ++k) {
    int idx = k - d;
    if (idx >= static_cast<int>(deg.size()) || deg[idx] <= k) {
      degree_ok = false;
      degree_detail = "fails at k=" + std::to_string(k) +
                      (idx < static_cast<int>(deg.size()) ? " with d_{k-d+1}=" + std::to_string(deg[idx]) : "");
      break;
    }
  }
  out.hypotheses.push_back({"ridge-degree-sequence", degree_ok, degree_detail});
  if (!start) return out;

  Labeling best = start->labeling;
  int best_sum = end_sum(c, best);
  if (n <= opts.exhaustive_limit) {
    out.trace.push_back("mode: exhaustive");
    for_each_witness(
        c, TraceProperty::traceable,
        [&](const Labeling& l) {
          int s = end_sum(c, l);
          if (s > best_sum) {
            best_sum = s;
            best = l;
          }
          return false;
        },
        opts.search);
  } else {
    out.trace.push_back("mode: hill-climb");
    bool improved = true;
    while (improved) {
      improved = false;
      std::vector<Labeling> moves{best.then(reversal(n))};
      Complex lab = relabel(c, best);
      for (int i = d + 2; i <= n; ++i) {
        if (lab.contains_mask(interval_mask(1, d) | vertex_bit(i))) moves.push_back(compose_order(best, flip_order(n, i)));
      }
      for (const Labeling& m : moves) {
        if (is_traceable_with(c, m) && end_sum(c, m) > best_sum) {
          best = m;
          best_sum = end_sum(c, m);
          improved = true;
          break;
        }
      }
    }
  }
  out.trace.push_back("traceable labeling with largest d_sigma+d_tau=" + std::to_string(best_sum));

  Complex lab = relabel(c, best);
  if (best_sum < n) {
    auto [ds, dt] = end_ridge_degrees(c, best);
    if (2 * ds >= n) {
      best = best.then(reversal(n));
      lab = relabel(c, best);
      out.trace.push_back("reversed so that d_sigma < n/2");
    }
  }
  if (auto k = ore_construction(lab)) {
    out.certificate = realize(c, best, *k, TraceProperty::weakly_hamiltonian, out);
    return out;
  }
  for (int i = d + 2; i <= n; ++i) {
    if (!lab.contains_mask(interval_mask(1, d) | vertex_bit(i))) continue;
    Labeling flipped = compose_order(best, flip_order(n, i));
    if (auto cert = weakly_hamiltonian_with(c, flipped)) {
      out.trace.push_back("flip at i=" + std::to_string(i) + "; rho_i*n closes the cycle");
      out.certificate = cert;
      return out;
    }
    if (is_traceable_with(c, flipped)) {
      if (auto k = ore_construction(relabel(c, flipped))) {
        out.trace.push_back("flip at i=" + std::to_string(i));
        out.certificate = realize(c, flipped, *k, TraceProperty::weakly_hamiltonian, out);
        return out;
      }
    }
  }
  out.trace.push_back("no construction applies");
  return out;
}

std::optional<char> quasi_traceable_case(const Complex& c, const Labeling& l, int j) {
  int n = c.n(), d = c.d();
  int m = n - d;
  if (j < 1 || j > m) return std::nullopt;
  Order o = l.order();
  std::vector<char> present(m + 1, 0);
  for (int i = 1; i <= m; ++i) present[i] = c.contains_mask(window_mask(o, d, i));
  auto all = [&](int a, int b) {
    for (int i = a; i <= b; ++i) {
      if (!present[i]) return false;
    }
    return true;
  };
  char which;
  bool ok;
  if (j == 1) {
    which = 'a';
    ok = all(2, m);
  } else if (j == m) {
    which = 'd';
    ok = all(1, m - 1);
  } else if (j <= n - 2 * d) {
    which = 'b';
    ok = all(1, j - 1) && all(j + d, m);
  } else {
    which = 'c';
    ok = all(1, j - 1) && present[m];
  }
  if (!ok) return std::nullopt;
  // Delta u H_j weakly traceable: consecutive present windows at distance <= d.
  present[j] = 1;
  if (!present[1] || !present[m]) return std::nullopt;
  int last = 1;
  for (int i = 2; i <= m; ++i) {
    if (!present[i]) continue;
    if (i - last > d) return std::nullopt;
    last = i;
  }
  return which;
}

namespace {

class AnyOrder {
 public:
  bool place(const Order&, int) { return true; }
  void unplace(const Order&, int) {}
  bool accept(const Order&) const { return true; }
};

std::optional<Construction> construct_case_a(const Complex& lab) {
  int n = lab.n(), d = lab.d();
  VertexMask sigma = interval_mask(1, d);
  VertexMask tau = interval_mask(n - d + 1, n);
  for (int i = d + 2; i <= n - d; ++i) {
    if (!lab.contains_mask(sigma | vertex_bit(i)) || !lab.contains_mask(vertex_bit(i - 1) | tau)) continue;
    Order o;
    if (d == 1 || i == d + 2) {
      append_up(o, 1, d);
      append_up(o, i, n);
      append_down(o, i - 1, d + 1);
    } else {
      append_down(o, n, i);
      append_up(o, 1, i - 1);
    }
    return Construction{o, "case (a): S_i, T_i present for i=" + std::to_string(i) + "; order " + order_text(o)};
  }
  if (lab.contains_mask(sigma | vertex_bit(n))) {
    Order o;
    append_up(o, 1, d);
    append_down(o, n, d + 1);
    return Construction{o, "case (a): sigma*n present; order " + order_text(o)};
  }
  if (lab.contains_mask(vertex_bit(1) | tau)) {
    Order o;
    append_up(o, 2, n);
    o.push_back(1);
    return Construction{o, "case (a): 1*tau present; order " + order_text(o)};
  }
  return std::nullopt;
}

Order case_b11_order(int n, int d, int j, int i) {
  Order o;
  if (i <= j - 1) {
    append_up(o, j + d, n);
    append_down(o, i - 1, 1);
    append_up(o, i, j + d - 1);
  } else if (i == j) {
    append_down(o, j - 2, 1);
    append_up(o, j, j + d - 1);
    o.push_back(j - 1);
    append_down(o, n, j + d);
  } else {
    append_up(o, 1, i - 2);
    append_up(o, i, j + d - 1);
    o.push_back(i - 1);
    append_down(o, n, j + d);
  }
  return o;
}

std::optional<Construction> construct_case_b(const Complex& lab, int j) {
  int n = lab.n(), d = lab.d();
  VertexMask sigma = interval_mask(1, d);
  VertexMask tau = interval_mask(n - d + 1, n);
  if (lab.contains_mask(sigma | vertex_bit(j + d))) {
    Order o;
    append_down(o, j + d - 1, 1);
    append_up(o, j + d, n);
    return Construction{o, "case (b): sigma*(d+j) joins the halfpaths; order " + order_text(o)};
  }
  if (lab.contains_mask(vertex_bit(j + d - 1) | tau)) {
    Order o;
    append_up(o, 1, j + d - 1);
    append_down(o, n, j + d);
    return Construction{o, "case (b): (d+j-1)*tau joins the halfpaths; order " + order_text(o)};
  }
  for (int i = d + 2; i <= n - d; ++i) {
    if (i == d + j) continue;
    if (!lab.contains_mask(sigma | vertex_bit(i)) || !lab.contains_mask(vertex_bit(i - 1) | tau)) continue;
    if (i < d + j) {
      Order o = case_b11_order(n, d, j, i);
      return Construction{o, "case (b.1.1): i=" + std::to_string(i) + "; order " + order_text(o)};
    }
    int jr = n - 2 * d + 2 - j;
    int ir = n + 2 - i;
    Order o = reverse_names(case_b11_order(n, d, jr, ir), n);
    return Construction{o, "case (b.1.2): i=" + std::to_string(i) + " via reversal; order " + order_text(o)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<QuasiTraceableWitness> quasi_traceable_detect(const Complex& c, const SearchOptions& opts) {
  require_within_cap(c.n(), opts);
  std::optional<QuasiTraceableWitness> found;
  if (c.n() <= c.d()) return found;
  AnyOrder policy;
  search_orders(c.n(), policy, [&](const Order& o) {
    Labeling l = Labeling::from_order(o);
    for (int j = 1; j <= c.n() - c.d(); ++j) {
      if (auto which = quasi_traceable_case(c, l, j)) {
        found = QuasiTraceableWitness{l, j, *which};
        return true;
      }
    }
    return false;
  });
  return found;
}

TheoremOutcome ore2_weakly_traceable(const Complex& c, const QuasiTraceableWitness& w) {
  TheoremOutcome out{"ore2", {}, std::nullopt, {}};
  int n = c.n(), d = c.d();
  auto which = quasi_traceable_case(c, w.labeling, w.j);
  out.hypotheses.push_back({"quasi-traceable", which.has_value() && *which == w.case_id,
                            "j=" + std::to_string(w.j) + " case " + std::string(1, w.case_id)});
  out.hypotheses.push_back(size_hypothesis(c));
  auto [ds, dt] = end_ridge_degrees(c, w.labeling);
  out.hypotheses.push_back({"ridge-degree-sum", ds + dt >= n - 1, degrees_text(ds, dt, n - 1)});
  if (!which || n <= 2 * d) return out;

  if (auto cert = weakly_traceable_with(c, w.labeling)) {
    out.trace.push_back("labeling already weakly traceable");
    out.certificate = cert;
    return out;
  }
  Complex lab = relabel(c, w.labeling);
  std::optional<Construction> k;
  switch (*which) {
    case 'a': k = construct_case_a(lab); break;
    case 'b': k = construct_case_b(lab, w.j); break;
    case 'c': break;
    case 'd': {
      Complex rev = relabel(lab, reversal(n));
      if (auto kr = construct_case_a(rev)) {
        k = Construction{reverse_names(kr->order, n), "case (d) via reversal: " + kr->description};
      }
      break;
    }
  }
  if (!k) {
    out.trace.push_back("no construction applies");
    return out;
  }
  out.certificate = realize(c, w.labeling, *k, TraceProperty::weakly_traceable, out);
  return out;
}

BertossiReport bertossi_bidirectional(const Complex& c, const std::optional<Labeling>& given, const SearchOptions& opts) {
  BertossiReport r;
  r.pure = c.is_pure();
  r.strongly_connected = r.pure && is_strongly_connected(c);
  if (given && unit_interval_with(c, *given).holds) {
    r.labeling = given;
  } else {
    r.labeling = search_hierarchy_labeling(c, HierarchyProperty::unit_interval, opts);
  }
  if (!r.labeling) return r;
  r.certificate = certify_with(c, *r.labeling, TraceProperty::traceable);
  r.traceable_same_labeling = r.certificate.has_value();
  r.forward_holds = !r.strongly_connected || r.traceable_same_labeling;
  r.backward_holds = !r.traceable_same_labeling || r.strongly_connected;
  return r;
}

std::optional<Face> missing_small_gap_face(const Complex& c, const Labeling& l) {
  Complex lab = relabel(c, l);
  int n = c.n(), d = c.d();
  for (int a = 1; a + d <= n; ++a) {
    VertexMask pool = interval_mask(a + 1, std::min(n, a + 2 * d));
    for (VertexMask s : subsets_of_size(pool, d)) {
      if (!lab.contains_mask(s | vertex_bit(a))) return Face::from_mask(s | vertex_bit(a));
    }
  }
  return std::nullopt;
}

bool contains_all_small_gap_faces(const Complex& c, const Labeling& l) { return !missing_small_gap_face(c, l); }

std::vector<Vertex> odd_even_order(int n) {
  Order o;
  for (int v = 1; v <= n; v += 2) o.push_back(v);
  for (int v = n % 2 == 0 ? n : n - 1; v >= 2; v -= 2) o.push_back(v);
  return o;
}

TheoremOutcome chch_hamiltonian(const Complex& c, const Labeling& l) {
  TheoremOutcome out{"chch", {}, std::nullopt, {}};
  bool ui = unit_interval_with(c, l).holds;
  out.hypotheses.push_back({"unit-interval", ui, ui ? "labeling is unit-interval" : "labeling is not unit-interval"});
  auto missing = missing_small_gap_face(c, l);
  bool gaps = !missing;
  out.hypotheses.push_back({"small-gap-faces", gaps,
                            gaps ? "every face of gap <= d present" : "missing face " + missing->to_string() + " (labels)"});
  if (!gaps) return out;
  Construction k{odd_even_order(c.n()), "odd vertices ascending, then even vertices descending"};
  out.certificate = realize(c, l, k, TraceProperty::hamiltonian, out);
  return out;
}

ChChChConditions chch_conditions(const Complex& c, const Labeling& l) {
  Complex lab = relabel(c, l);
  int n = c.n(), d = c.d();
  ChChChConditions r{true, true, contains_all_small_gap_faces(c, l)};
  for (int size = 0; size <= d && size <= n; ++size) {
    for (VertexMask s : subsets_of_size(full_mask(n), size)) {
      Subcomplex sub = delete_vertices(lab, s);
      bool pure = sub.complex.is_pure() && sub.complex.size() > 0;
      if (!pure || !is_strongly_connected(sub.complex)) r.deletions_strongly_connected = false;
      if (!pure || !is_traceable_with(sub.complex, Labeling::identity(sub.complex.n()))) r.deletions_traceable = false;
    }
  }
  return r;
}

namespace {

bool graph_edge(const Complex& g, Vertex a, Vertex b) { return g.contains_mask(vertex_bit(a) | vertex_bit(b)); }

Complex complete_graph_minus(int n, const std::vector<VertexMask>& removed) {
  std::vector<Face> edges;
  for (VertexMask e : subsets_of_size(full_mask(n), 2)) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(Face::from_mask(e));
  }
  return Complex(n, 1, std::move(edges));
}

std::vector<VertexMask> non_edges(const Complex& g) {
  std::vector<VertexMask> out;
  for (VertexMask e : subsets_of_size(full_mask(g.n()), 2)) {
    if (!g.contains_mask(e)) out.push_back(e);
  }
  return out;
}

HypothesisCheck ore_degree_condition(const Complex& g, int bound) {
  std::vector<int> deg(g.n() + 1, 0);
  for (const Face& e : g.facets()) {
    deg[e.min()]++;
    deg[e.max()]++;
  }
  for (VertexMask e : non_edges(g)) {
    Face f = Face::from_mask(e);
    if (deg[f.min()] + deg[f.max()] < bound) {
      return {"degree-sum", false,
              "deg " + std::to_string(f.min()) + " + deg " + std::to_string(f.max()) + " < " + std::to_string(bound)};
    }
  }
  return {"degree-sum", true, "deg u + deg v >= " + std::to_string(bound) + " for non-adjacent u, v"};
}

}  // namespace

TheoremOutcome ore_graph_cycle_pipeline(const Complex& graph) {
  if (graph.d() != 1) throw RangeError("graph pipeline requires d = 1");
  int n = graph.n();
  TheoremOutcome out{"ore-graph-cycle", {ore_degree_condition(graph, n)}, std::nullopt, {}};
  if (n < 3) return out;
  std::vector<VertexMask> removed;
  Order cycle = identity_order(n);
  for (VertexMask e : non_edges(graph)) {
    removed.push_back(e);
    Complex current = complete_graph_minus(n, removed);
    int at = -1;
    for (int p = 0; p < n; ++p) {
      if ((vertex_bit(cycle[p]) | vertex_bit(cycle[(p + 1) % n])) == e) at = p;
    }
    if (at < 0) continue;
    Order path;
    for (int k = 1; k <= n; ++k) path.push_back(cycle[(at + k) % n]);
    TheoremOutcome step = ore_weak_hamiltonian(current, Labeling::from_order(path));
    if (!step.certificate) {
      out.trace.push_back("repair failed after removing {" + Face::from_mask(e).to_string() + "}");
      return out;
    }
    cycle = step.certificate->labeling.order();
    out.trace.push_back("removed {" + Face::from_mask(e).to_string() + "}: " + step.trace.back());
  }
  out.certificate = certify_with(graph, Labeling::from_order(cycle), TraceProperty::hamiltonian);
  return out;
}

TheoremOutcome ore_graph_path_pipeline(const Complex& graph) {
  if (graph.d() != 1) throw RangeError("graph pipeline requires d = 1");
  int n = graph.n();
  TheoremOutcome out{"ore-graph-path", {ore_degree_condition(graph, n - 1)}, std::nullopt, {}};
  if (n < 3) {
    out.certificate = certify_with(graph, Labeling::identity(n), TraceProperty::traceable);
    return out;
  }
  std::vector<VertexMask> removed;
  Order path = identity_order(n);
  for (VertexMask e : non_edges(graph)) {
    removed.push_back(e);
    Complex current = complete_graph_minus(n, removed);
    int j = 0;
    for (int p = 0; p + 1 < n; ++p) {
      if ((vertex_bit(path[p]) | vertex_bit(path[p + 1])) == e) j = p + 1;
    }
    if (j == 0) continue;
    if (graph_edge(current, path.front(), path.back())) {
      Order next;
      for (int k = 0; k < n; ++k) next.push_back(path[(j + k) % n]);
      path = next;
      out.trace.push_back("removed {" + Face::from_mask(e).to_string() + "}: endpoints adjacent, path rotated");
      continue;
    }
    Labeling l = Labeling::from_order(path);
    char which = j == 1 ? 'a' : (j == n - 1 ? 'd' : 'b');
    TheoremOutcome step = ore2_weakly_traceable(current, QuasiTraceableWitness{l, j, which});
    if (!step.certificate) {
      out.trace.push_back("repair failed after removing {" + Face::from_mask(e).to_string() + "}");
      return out;
    }
    path = step.certificate->labeling.order();
    out.trace.push_back("removed {" + Face::from_mask(e).to_string() + "}: " + step.trace.back());
  }
  out.certificate = certify_with(graph, Labeling::from_order(path), TraceProperty::traceable);
  return out;
}

}  // namespace hamint
