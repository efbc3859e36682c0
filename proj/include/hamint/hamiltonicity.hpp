#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamint/complex.hpp"
#include "hamint/search.hpp"

namespace hamint {

enum class PathKind { tight_path, tight_cycle, weak_path, weak_cycle };

enum class TraceProperty { traceable, hamiltonian, weakly_traceable, weakly_hamiltonian };

std::string to_string(PathKind k);
PathKind path_kind_from_string(const std::string& s);
std::string to_string(TraceProperty p);
PathKind kind_of(TraceProperty p);

/// A labeling together with the window indices i (faces H_i of the relabeled
/// complex) forming the path or cycle, in traversal order.
struct PathCertificate {
  PathKind kind;
  Labeling labeling;
  std::vector<int> indices;
};

/// Vertex mask (in original names) of the window H_i under the labeling with the given order.
VertexMask window_mask(const std::vector<Vertex>& order, int d, int i);

bool is_traceable_with(const Complex& c, const Labeling& l);
bool is_hamiltonian_with(const Complex& c, const Labeling& l);
std::optional<PathCertificate> weakly_traceable_with(const Complex& c, const Labeling& l);
std::optional<PathCertificate> weakly_hamiltonian_with(const Complex& c, const Labeling& l);
std::optional<PathCertificate> certify_with(const Complex& c, const Labeling& l, TraceProperty p);

/// Literal definition checks: exhaustive search over sequences of distinct present
/// windows with incidence and coverage, without shortcuts.
bool weak_path_by_definition(const Complex& c, const Labeling& l);
bool weak_cycle_by_definition(const Complex& c, const Labeling& l);

/// First witness in search order; certificate re-derived by the fixed-labeling check.
std::optional<PathCertificate> search_labeling(const Complex& c, TraceProperty p, const SearchOptions& opts = {});

/// Calls visit(labeling) for every labeling with the property (no symmetry reduction).
/// visit returns true to stop early.
template <class Visit>
void for_each_witness(const Complex& c, TraceProperty p, Visit&& visit, const SearchOptions& opts = {});

/// Independent check of a certificate against the definition.
bool verify_certificate(const Complex& c, const PathCertificate& cert, std::string* reason = nullptr);

struct DeletionExtract {
  Subcomplex result;     ///< complex carrying the weak path (Delta itself when nothing is deleted)
  PathCertificate path;  ///< weak-path certificate on result.complex
  int removed = 0;       ///< m_j, the number of deleted vertices
};

/// From a weak cycle and a position j (1-based) in it, extract a weak path by
/// deleting the vertices only covered by the j-th face, or by cutting the cycle.
/// Throws NotApplicable when neither case applies.
DeletionExtract lemma_deletion_extract(const Complex& c, const PathCertificate& cycle, int j);

/// Adds vertices n+1..n+d and the facets {v, n+1, ..., n+d} for every vertex v.
Complex gamma_construction(const Complex& c);

namespace detail {
std::vector<Vertex> first_order(const Complex& c, TraceProperty p, bool symmetric, const SearchOptions& opts,
                                 const std::function<bool(const std::vector<Vertex>&)>& visit);
}

template <class Visit>
void for_each_witness(const Complex& c, TraceProperty p, Visit&& visit, const SearchOptions& opts) {
  detail::first_order(c, p, false, opts, [&](const std::vector<Vertex>& order) {
    return visit(Labeling::from_order(order));
  });
}

}  // namespace hamint
