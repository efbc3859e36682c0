#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamint/complex.hpp"
#include "hamint/dfi/minors.hpp"

namespace hamint::dfi {

template <class F>
struct Reduction {
  Polynomial<F> remainder;
  std::vector<Polynomial<F>> quotients;  ///< p = sum quotients[i] * basis[i] + remainder
};

/// Multivariate division. Each step divides by the first basis element whose
/// leading monomial divides the current leading monomial.
template <class F>
Reduction<F> reduce(const Polynomial<F>& p, const std::vector<Polynomial<F>>& basis);

/// (lcm / lm f) f / lc f - (lcm / lm g) g / lc g
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

struct GBOptions {
  int max_d = 3;          ///< fixed by the variable layout
  int max_n = 13;
  int max_facets = 12;
  bool stop_at_first_failure = true;
};

template <class F>
struct GBFailure {
  Face first;
  Face second;
  Polynomial<F> remainder;
};

template <class F>
struct GBReport {
  bool is_gb = true;
  int checked_pairs = 0;
  int skipped_coprime = 0;
  std::optional<GBFailure<F>> failure;
};

/// Buchberger criterion on the maximal minors of the facets: every S-polynomial of a
/// pair with non-coprime leading terms must reduce to zero. Pairs are processed by
/// increasing degree of the lcm of their leading terms, then by index.
template <class F>
GBReport<F> gb_check_minors(const Complex& c, const GBOptions& opts = {});

/// One application of the shift lemma for minors forming a Groebner basis.
struct ShiftInstance {
  Face first;      ///< F = a_0 ... a_d
  Face second;     ///< G = b_0 ... b_d
  int l = 0;
  bool up = true;  ///< replace a_l by a_l + 1 (up) or by a_l - 1 (down)
  Face required;   ///< the facet the lemma forces
  bool present = false;
  bool proof_polynomial_reduces = false;  ///< the witnessing polynomial reduces to zero
};

struct ShiftReport {
  bool applicable = false;  ///< the minors form a Groebner basis
  int instances = 0;
  std::vector<ShiftInstance> violations;  ///< instances with a missing face or nonzero remainder
  bool holds() const { return applicable && violations.empty(); }
};

/// Enumerates every facet pair and l satisfying the shift lemma's hypotheses, checks
/// the forced facet, and reduces the witnessing polynomial against the minors.
template <class F>
ShiftReport gbac_consequence_check(const Complex& c, const GBOptions& opts = {});

/// All instances (no Groebner basis precondition); used by gbac_consequence_check.
std::vector<ShiftInstance> shift_instances(const Complex& c);

/// Witnessing polynomial p'q - pq' of a shift instance.
template <class F>
Polynomial<F> shift_proof_polynomial(const ShiftInstance& s, int d, int n);

struct InitialTerms {
  std::vector<Monomial> monomials;  ///< leading monomials of the generators, facet order
  bool squarefree = true;
  bool certified_initial_ideal = false;  ///< the minors form a Groebner basis
};

template <class F>
InitialTerms initial_terms(const Complex& c, const GBOptions& opts = {});

}  // namespace hamint::dfi
