#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hamint/complex.hpp"

namespace hamint::testsupport {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

struct CorpusOptions {
  int count = 240;
  int max_n = 7;
  std::uint64_t seed = kDefaultSeed;
};

/// Pure complexes with d in {1, 2} and n <= max_n: random facet sets of varying
/// density, unions of interval skeleta under random relabelings, and named examples.
/// Duplicates are removed; the result is deterministic in the seed.
std::vector<Complex> generate_corpus(const CorpusOptions& opts = {});

/// Union of the d-skeleta of the simplices on the given label intervals [a, b].
Complex interval_union(int n, int d, const std::vector<std::pair<int, int>>& intervals);

/// Every complex on 1..n that is a union of interval skeleta, covers all vertices and
/// is strongly connected, given by its maximal intervals.
std::vector<Complex> all_connected_interval_unions(int n, int d);

Labeling random_labeling(int n, std::mt19937_64& rng);

/// Brute force over vertex permutations.
bool graph_has_hamiltonian_cycle(const Complex& g);
bool graph_has_hamiltonian_path(const Complex& g);

/// Graph on 1..n with the edges whose bit is set in `code` (edge order: 12, 13, ..., 1n, 23, ...).
/// Returns false when some vertex is isolated.
bool graph_from_code(int n, std::uint64_t code, std::vector<Face>& edges);

/// Laplace expansion along the first row.
long long cofactor_determinant(const std::vector<std::vector<long long>>& m);

}  // namespace hamint::testsupport
