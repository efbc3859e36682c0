#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hamint/dfi/field.hpp"

namespace hamint::dfi {

/// The variable x_{row,col}: row in 0..kMaxRows-1, column in 1..kMaxCols.
struct VariableIndex {
  int row;
  int col;
  bool operator==(const VariableIndex&) const = default;
};

inline constexpr int kMaxRows = 4;
inline constexpr int kMaxCols = 16;

/// Dense exponent vector over the kMaxRows x kMaxCols variables. Slots are ordered
/// from the largest variable down, so comparing the vectors lexicographically is the
/// lexicographic term order with x_{ij} > x_{hk} iff i < h, or i = h and j < k.
class Monomial {
 public:
  static constexpr int kVars = kMaxRows * kMaxCols;

  Monomial() { e_.fill(0); }
  static Monomial variable(int row, int col);
  static int slot(int row, int col) { return row * kMaxCols + (col - 1); }

  int exponent(int row, int col) const { return e_[slot(row, col)]; }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool squarefree() const;
  /// Bit k set when slot k has positive exponent.
  std::uint64_t support() const;

  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const { return (support() & m.support()) == 0; }
  Monomial operator*(const Monomial& m) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& m) const;

  std::vector<std::pair<VariableIndex, int>> factors() const;
  std::string to_string() const;

  std::strong_ordering operator<=>(const Monomial& m) const;
  bool operator==(const Monomial& m) const { return e_ == m.e_; }

 private:
  std::array<std::uint8_t, kVars> e_;
};

/// Comparison under the diagonal lexicographic order.
inline std::strong_ordering diagonal_lex_compare(const Monomial& a, const Monomial& b) { return a <=> b; }

/// Sparse polynomial; terms are kept in decreasing term order, so the first term leads.
template <class F>
class Polynomial {
 public:
  using Terms = std::map<Monomial, F, std::greater<Monomial>>;

  Polynomial() = default;
  static Polynomial monomial(const F& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const F& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const F& c);
  /// *this += c * m * p
  void add_multiple(const F& c, const Monomial& m, const Polynomial& p);

  Polynomial& operator+=(const Polynomial& p);
  Polynomial& operator-=(const Polynomial& p);
  Polynomial operator+(const Polynomial& p) const;
  Polynomial operator-(const Polynomial& p) const;
  Polynomial operator*(const Polynomial& p) const;
  bool operator==(const Polynomial& p) const { return terms_ == p.terms_; }

  /// Value with x_{row,col} replaced by value(row, col).
  F evaluate(const std::function<F(int, int)>& value) const;

  /// Signed monomial text, e.g. "x[0][1]*x[1][2] - x[0][2]*x[1][1]".
  std::string to_string() const;

 private:
  Terms terms_;
};

extern template class Polynomial<Rational>;
extern template class Polynomial<Prime>;

}  // namespace hamint::dfi
