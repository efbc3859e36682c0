#pragma once

#include <vector>

#include "hamint/complex.hpp"
#include "hamint/dfi/polynomial.hpp"

namespace hamint::dfi {

/// The minor [rows | cols] of the generic (d+1) x n matrix (x_{ij}), expanded over
/// all permutations. Rows are 0-based, columns 1-based; both strictly increasing.
template <class F>
Polynomial<F> minor(const std::vector<int>& rows, const std::vector<int>& cols, int d, int n);

/// Maximal minor [0 1 ... d | face].
template <class F>
Polynomial<F> maximal_minor(const Face& face, int d, int n);

/// One maximal minor per facet, in facet order. Throws CapacityError when
/// d + 1 > kMaxRows or n > kMaxCols.
template <class F>
std::vector<Polynomial<F>> dfi_generators(const Complex& c);

}  // namespace hamint::dfi
