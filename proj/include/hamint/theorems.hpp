#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamint/hamiltonicity.hpp"
#include "hamint/hierarchy.hpp"

namespace hamint {

struct HypothesisCheck {
  std::string name;
  bool holds;
  std::string detail;
};

/// Result of running a constructive sufficient condition. A certificate may be
/// present even when a hypothesis fails, if the construction still succeeded.
struct TheoremOutcome {
  std::string theorem;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<PathCertificate> certificate;
  std::vector<std::string> trace;
  bool hypotheses_hold() const;
  const HypothesisCheck* hypothesis(const std::string& name) const;
};

/// (d-1)-faces contained in some facet.
std::vector<Face> ridges(const Complex& c);

/// Ridge degrees of the first d and the last d vertices under the labeling.
std::pair<int, int> end_ridge_degrees(const Complex& c, const Labeling& l);

/// Weak Hamiltonicity from a traceable labeling with d_sigma + d_tau >= n.
TheoremOutcome ore_weak_hamiltonian(const Complex& c, const Labeling& l);
/// Every pair of disjoint ridges has degree sum at least n; then as above.
TheoremOutcome ore_disjoint_ridges(const Complex& c, const Labeling& l);
/// Every ridge has degree at least n/2; then as above.
TheoremOutcome dirac_check(const Complex& c, const Labeling& l);

struct PosaOptions {
  int exhaustive_limit = 8;  ///< largest n for which the best labeling is found by enumeration
  SearchOptions search;
};

/// Weak Hamiltonicity from the sorted ridge-degree condition, using flips of a
/// traceable labeling.
TheoremOutcome posa_weak_hamiltonian(const Complex& c, const PosaOptions& opts = {});

struct QuasiTraceableWitness {
  Labeling labeling;
  int j = 0;
  char case_id = 'a';
};

/// Checks the definition's case condition for (labeling, j); returns the case letter.
std::optional<char> quasi_traceable_case(const Complex& c, const Labeling& l, int j);
std::optional<QuasiTraceableWitness> quasi_traceable_detect(const Complex& c, const SearchOptions& opts = {});
/// Weak traceability from a quasi-traceable labeling with d_sigma + d_tau >= n-1.
TheoremOutcome ore2_weakly_traceable(const Complex& c, const QuasiTraceableWitness& w);

struct BertossiReport {
  std::optional<Labeling> labeling;  ///< unit-interval labeling used, if any
  bool pure = false;
  bool strongly_connected = false;
  bool traceable_same_labeling = false;
  bool forward_holds = true;   ///< strongly connected => traceable with the same labeling
  bool backward_holds = true;  ///< traceable with the same labeling => strongly connected
  std::optional<PathCertificate> certificate;
};

/// Uses `given` when it is unit-interval, otherwise searches for a unit-interval labeling.
BertossiReport bertossi_bidirectional(const Complex& c, const std::optional<Labeling>& given = std::nullopt,
                                      const SearchOptions& opts = {});

/// All faces of gap at most d are present under the labeling.
bool contains_all_small_gap_faces(const Complex& c, const Labeling& l);
/// Smallest face of gap at most d (in labels) missing under the labeling.
std::optional<Face> missing_small_gap_face(const Complex& c, const Labeling& l);
/// Tight Hamiltonicity via the odd-ascending/even-descending relabeling.
TheoremOutcome chch_hamiltonian(const Complex& c, const Labeling& l);
/// Order 1,3,5,...,then even vertices descending.
std::vector<Vertex> odd_even_order(int n);

struct ChChChConditions {
  bool deletions_strongly_connected;  ///< every deletion of at most d vertices is pure and strongly connected
  bool deletions_traceable;           ///< every deletion of at most d vertices is pure and traceable (compressed labeling)
  bool small_gap_faces;               ///< every face of gap at most d is present
};
ChChChConditions chch_conditions(const Complex& c, const Labeling& l);

/// Graphs (d = 1): start from the complete graph with a Hamiltonian cycle and delete
/// the non-edges one at a time, repairing the cycle by the Ore construction.
/// Returns a tight-cycle certificate or nothing when a repair step fails.
TheoremOutcome ore_graph_cycle_pipeline(const Complex& graph);
/// As above with a Hamiltonian path repaired by the quasi-traceable construction.
TheoremOutcome ore_graph_path_pipeline(const Complex& graph);

}  // namespace hamint
