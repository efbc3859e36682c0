#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace hamint::dfi {

using Rational = mpq_class;

/// Integers modulo the prime P.
template <std::uint32_t P>
class ModP {
 public:
  static constexpr std::uint32_t modulus = P;

  ModP() = default;
  ModP(long long v) : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  std::uint32_t value() const { return v_; }

  ModP operator+(ModP o) const { return raw((v_ + o.v_) % P); }
  ModP operator-(ModP o) const { return raw((v_ + P - o.v_) % P); }
  ModP operator-() const { return raw((P - v_) % P); }
  ModP operator*(ModP o) const { return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P)); }
  ModP operator/(ModP o) const { return *this * o.inverse(); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  bool operator==(const ModP&) const = default;

  ModP inverse() const {
    std::uint64_t base = v_, result = 1;
    for (std::uint32_t e = P - 2; e; e >>= 1) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
    }
    return raw(static_cast<std::uint32_t>(result));
  }

 private:
  static ModP raw(std::uint32_t v) {
    ModP m;
    m.v_ = v;
    return m;
  }
  std::uint32_t v_ = 0;
};

using Prime = ModP<32003>;

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
template <std::uint32_t P>
bool is_zero(const ModP<P>& c) {
  return c.value() == 0;
}

inline bool is_one(const Rational& c) { return c == 1; }
template <std::uint32_t P>
bool is_one(const ModP<P>& c) {
  return c.value() == 1;
}

inline bool is_minus_one(const Rational& c) { return c == -1; }
template <std::uint32_t P>
bool is_minus_one(const ModP<P>& c) {
  return c.value() == P - 1;
}

inline std::string coefficient_string(const Rational& c) { return c.get_str(); }
template <std::uint32_t P>
std::string coefficient_string(const ModP<P>& c) {
  return std::to_string(c.value());
}

inline std::string field_name(const Rational*) { return "rational"; }
template <std::uint32_t P>
std::string field_name(const ModP<P>*) {
  return "prime-" + std::to_string(P);
}

}  // namespace hamint::dfi
