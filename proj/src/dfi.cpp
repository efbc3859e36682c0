#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <tuple>

#include "hamint/dfi/groebner.hpp"
#include "hamint/errors.hpp"

namespace hamint::dfi {

Monomial Monomial::variable(int row, int col) {
  if (row < 0 || row >= kMaxRows || col < 1 || col > kMaxCols) {
    throw RangeError("variable x[" + std::to_string(row) + "][" + std::to_string(col) + "] out of range");
  }
  Monomial m;
  m.e_[slot(row, col)] = 1;
  return m;
}

int Monomial::degree() const {
  int s = 0;
  for (auto e : e_) s += e;
  return s;
}

bool Monomial::squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint8_t e) { return e <= 1; });
}

std::uint64_t Monomial::support() const {
  std::uint64_t s = 0;
  for (int k = 0; k < kVars; ++k) {
    if (e_[k]) s |= std::uint64_t{1} << k;
  }
  return s;
}

bool Monomial::divides(const Monomial& m) const {
  for (int k = 0; k < kVars; ++k) {
    if (e_[k] > m.e_[k]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r;
  for (int k = 0; k < kVars; ++k) {
    int e = e_[k] + m.e_[k];
    if (e > 255) throw RangeError("monomial exponent overflow");
    r.e_[k] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (int k = 0; k < kVars; ++k) r.e_[k] = static_cast<std::uint8_t>(e_[k] - divisor.e_[k]);
  return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
  Monomial r;
  for (int k = 0; k < kVars; ++k) r.e_[k] = std::max(e_[k], m.e_[k]);
  return r;
}

std::vector<std::pair<VariableIndex, int>> Monomial::factors() const {
  std::vector<std::pair<VariableIndex, int>> out;
  for (int k = 0; k < kVars; ++k) {
    if (e_[k]) out.push_back({{k / kMaxCols, k % kMaxCols + 1}, e_[k]});
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors()) {
    if (!s.empty()) s += "*";
    s += "x[" + std::to_string(v.row) + "][" + std::to_string(v.col) + "]";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::strong_ordering Monomial::operator<=>(const Monomial& m) const {
  int c = std::memcmp(e_.data(), m.e_.data(), kVars);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

template <class F>
Polynomial<F> Polynomial<F>::monomial(const F& c, const Monomial& m) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

template <class F>
void Polynomial<F>::add_term(const Monomial& m, const F& c) {
  if (dfi::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (dfi::is_zero(it->second)) terms_.erase(it);
  }
}

template <class F>
void Polynomial<F>::add_multiple(const F& c, const Monomial& m, const Polynomial& p) {
  for (const auto& [pm, pc] : p.terms_) {
    F prod = c * pc;
    add_term(m * pm, prod);
  }
}

template <class F>
Polynomial<F>& Polynomial<F>::operator+=(const Polynomial& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, c);
  return *this;
}

template <class F>
Polynomial<F>& Polynomial<F>::operator-=(const Polynomial& p) {
  for (const auto& [m, c] : p.terms_) {
    F neg = -c;
    add_term(m, neg);
  }
  return *this;
}

template <class F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& p) const {
  Polynomial r = *this;
  r += p;
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& p) const {
  Polynomial r = *this;
  r -= p;
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& p) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.add_multiple(c, m, p);
  return r;
}

template <class F>
F Polynomial<F>::evaluate(const std::function<F(int, int)>& value) const {
  F total(0);
  for (const auto& [m, c] : terms_) {
    F t = c;
    for (const auto& [v, e] : m.factors()) {
      for (int k = 0; k < e; ++k) t *= value(v.row, v.col);
    }
    total += t;
  }
  return total;
}

template <class F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    std::string coeff;
    if (is_one(c)) {
    } else if (is_minus_one(c)) {
      negative = true;
    } else {
      coeff = coefficient_string(c);
      if (coeff[0] == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
    }
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += coeff.empty() ? "1" : coeff;
    } else {
      if (!coeff.empty()) s += coeff + "*";
      s += m.to_string();
    }
  }
  return s;
}

template class Polynomial<Rational>;
template class Polynomial<Prime>;

namespace {

void check_strict(const std::vector<int>& v, int lo, int hi, const char* what) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < lo || v[k] > hi || (k > 0 && v[k] <= v[k - 1])) {
      throw RangeError(std::string(what) + " indices must be strictly increasing in " + std::to_string(lo) + ".." +
                       std::to_string(hi));
    }
  }
}

void check_layout(int d, int n) {
  if (d + 1 > kMaxRows) throw CapacityError("matrix rows (d+1)", d + 1, kMaxRows);
  if (n > kMaxCols) throw CapacityError("matrix columns (n)", n, kMaxCols);
}

}  // namespace

template <class F>
Polynomial<F> minor(const std::vector<int>& rows, const std::vector<int>& cols, int d, int n) {
  check_layout(d, n);
  if (rows.size() != cols.size() || rows.empty()) throw ArityError("minor needs equally many rows and columns");
  check_strict(rows, 0, d, "row");
  check_strict(cols, 1, n, "column");
  int r = static_cast<int>(rows.size());
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial<F> p;
  do {
    int inversions = 0;
    for (int a = 0; a < r; ++a) {
      for (int b = a + 1; b < r; ++b) inversions += perm[a] > perm[b];
    }
    Monomial m;
    for (int k = 0; k < r; ++k) m = m * Monomial::variable(rows[k], cols[perm[k]]);
    p.add_term(m, F(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

template <class F>
Polynomial<F> maximal_minor(const Face& face, int d, int n) {
  std::vector<int> rows(d + 1);
  std::iota(rows.begin(), rows.end(), 0);
  auto vs = face.vertices();
  return minor<F>(rows, std::vector<int>(vs.begin(), vs.end()), d, n);
}

template <class F>
std::vector<Polynomial<F>> dfi_generators(const Complex& c) {
  check_layout(c.d(), c.n());
  std::vector<Polynomial<F>> gens;
  for (const Face& f : c.facets()) gens.push_back(maximal_minor<F>(f, c.d(), c.n()));
  return gens;
}

template <class F>
Reduction<F> reduce(const Polynomial<F>& p, const std::vector<Polynomial<F>>& basis) {
  Reduction<F> red;
  red.quotients.resize(basis.size());
  std::vector<Monomial> leads;
  std::vector<std::uint64_t> lead_support;
  for (const auto& b : basis) {
    if (b.is_zero()) throw RangeError("zero polynomial in reduction basis");
    leads.push_back(b.leading_monomial());
    lead_support.push_back(b.leading_monomial().support());
  }
  Polynomial<F> rest = p;
  while (!rest.is_zero()) {
    Monomial lm = rest.leading_monomial();
    F lc = rest.leading_coefficient();
    std::uint64_t sup = lm.support();
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((lead_support[i] & ~sup) != 0 || !leads[i].divides(lm)) continue;
      F factor = lc / basis[i].leading_coefficient();
      Monomial shift = lm / leads[i];
      red.quotients[i].add_term(shift, factor);
      F neg = -factor;
      rest.add_multiple(neg, shift, basis[i]);
      divided = true;
      break;
    }
    if (!divided) {
      red.remainder.add_term(lm, lc);
      F neg = -lc;
      rest.add_term(lm, neg);
    }
  }
  return red;
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial<F> s;
  F cf = F(1) / f.leading_coefficient();
  F cg = F(-1) / g.leading_coefficient();
  s.add_multiple(cf, l / f.leading_monomial(), f);
  s.add_multiple(cg, l / g.leading_monomial(), g);
  return s;
}

namespace {

void check_gb_caps(const Complex& c, const GBOptions& opts) {
  if (c.d() > std::min(opts.max_d, kMaxRows - 1)) throw CapacityError("Groebner check dimension", c.d(), opts.max_d);
  if (c.n() > opts.max_n) throw CapacityError("Groebner check vertex count", c.n(), opts.max_n, "--gb-max-n");
  int facets = static_cast<int>(c.facets().size());
  if (facets > opts.max_facets) {
    throw CapacityError("Groebner check facet count", facets, opts.max_facets, "--gb-max-facets");
  }
}

}  // namespace

template <class F>
GBReport<F> gb_check_minors(const Complex& c, const GBOptions& opts) {
  check_gb_caps(c, opts);
  auto gens = dfi_generators<F>(c);
  const auto& facets = c.facets();
  std::vector<std::tuple<int, int, int>> pairs;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(gens.size()); ++j) {
      pairs.emplace_back(gens[i].leading_monomial().lcm(gens[j].leading_monomial()).degree(), i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  GBReport<F> report;
  for (const auto& [deg, i, j] : pairs) {
    if (gens[i].leading_monomial().coprime(gens[j].leading_monomial())) {
      ++report.skipped_coprime;
      continue;
    }
    ++report.checked_pairs;
    auto red = reduce(s_polynomial(gens[i], gens[j]), gens);
    if (!red.remainder.is_zero()) {
      if (!report.failure) report.failure = GBFailure<F>{facets[i], facets[j], red.remainder};
      report.is_gb = false;
      if (opts.stop_at_first_failure) break;
    }
  }
  return report;
}

std::vector<ShiftInstance> shift_instances(const Complex& c) {
  std::vector<ShiftInstance> out;
  int d = c.d();
  for (const Face& f : c.facets()) {
    for (const Face& g : c.facets()) {
      for (int l = 0; l <= d - 1; ++l) {
        bool ok = f.at(l + 1) > f.at(l) + 1;
        for (int i = 0; ok && i <= l; ++i) ok = f.at(i) == g.at(i);
        for (int k = 1; ok && l + k <= d; ++k) ok = g.at(l + k) == g.at(l) + k;
        if (!ok) continue;
        ShiftInstance s{f, g, l, true, f.without(f.at(l)).with(f.at(l) + 1)};
        s.present = c.contains(s.required);
        out.push_back(s);
      }
      for (int l = 1; l <= d; ++l) {
        bool ok = f.at(l - 1) < f.at(l) - 1;
        for (int i = l; ok && i <= d; ++i) ok = f.at(i) == g.at(i);
        for (int k = 1; ok && k <= l; ++k) ok = g.at(l - k) == g.at(l) - k;
        if (!ok) continue;
        ShiftInstance s{f, g, l, false, f.without(f.at(l)).with(f.at(l) - 1)};
        s.present = c.contains(s.required);
        out.push_back(s);
      }
    }
  }
  return out;
}

template <class F>
Polynomial<F> shift_proof_polynomial(const ShiftInstance& s, int d, int n) {
  std::vector<int> rows, a_cols, b_cols;
  if (s.up) {
    for (int i = s.l + 1; i <= d; ++i) {
      rows.push_back(i);
      a_cols.push_back(s.first.at(i));
      b_cols.push_back(s.second.at(i));
    }
  } else {
    for (int i = 0; i <= s.l - 1; ++i) {
      rows.push_back(i);
      a_cols.push_back(s.first.at(i));
      b_cols.push_back(s.second.at(i));
    }
  }
  Polynomial<F> p = maximal_minor<F>(s.first, d, n);
  Polynomial<F> q = maximal_minor<F>(s.second, d, n);
  Polynomial<F> p1 = minor<F>(rows, a_cols, d, n);
  Polynomial<F> q1 = minor<F>(rows, b_cols, d, n);
  return p1 * q - p * q1;
}

template <class F>
ShiftReport gbac_consequence_check(const Complex& c, const GBOptions& opts) {
  ShiftReport report;
  report.applicable = gb_check_minors<F>(c, opts).is_gb;
  if (!report.applicable) return report;
  auto gens = dfi_generators<F>(c);
  for (ShiftInstance s : shift_instances(c)) {
    ++report.instances;
    s.proof_polynomial_reduces = reduce(shift_proof_polynomial<F>(s, c.d(), c.n()), gens).remainder.is_zero();
    if (!s.present || !s.proof_polynomial_reduces) report.violations.push_back(s);
  }
  return report;
}

template <class F>
InitialTerms initial_terms(const Complex& c, const GBOptions& opts) {
  InitialTerms out;
  for (const auto& g : dfi_generators<F>(c)) {
    out.monomials.push_back(g.leading_monomial());
    out.squarefree = out.squarefree && g.leading_monomial().squarefree();
  }
  out.certified_initial_ideal = out.squarefree && gb_check_minors<F>(c, opts).is_gb;
  return out;
}

#define HAMINT_DFI_INSTANTIATE(F)                                                                     \
  template Polynomial<F> minor<F>(const std::vector<int>&, const std::vector<int>&, int, int);       \
  template Polynomial<F> maximal_minor<F>(const Face&, int, int);                                     \
  template std::vector<Polynomial<F>> dfi_generators<F>(const Complex&);                             \
  template Reduction<F> reduce<F>(const Polynomial<F>&, const std::vector<Polynomial<F>>&);          \
  template Polynomial<F> s_polynomial<F>(const Polynomial<F>&, const Polynomial<F>&);                \
  template GBReport<F> gb_check_minors<F>(const Complex&, const GBOptions&);                         \
  template Polynomial<F> shift_proof_polynomial<F>(const ShiftInstance&, int, int);                  \
  template ShiftReport gbac_consequence_check<F>(const Complex&, const GBOptions&);                  \
  template InitialTerms initial_terms<F>(const Complex&, const GBOptions&);

HAMINT_DFI_INSTANTIATE(Rational)
HAMINT_DFI_INSTANTIATE(Prime)

}  // namespace hamint::dfi
