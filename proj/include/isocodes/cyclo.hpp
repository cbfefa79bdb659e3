#pragma once

#include <array>
#include <string>

#include "isocodes/bigint.hpp"

namespace isocodes {

/// Element c0 + c1 z + c2 z^2 + c3 z^3 of Q(z), z a primitive 8th root of
/// unity (z^4 = -1). z^2 = i and z - z^3 = sqrt(2).
class CycloRat {
 public:
  CycloRat() = default;
  CycloRat(int v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT: implicit from integers is intended
  CycloRat(const Rational& v) : c_{v, 0, 0, 0} {}  // NOLINT
  CycloRat(const Integer& v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT
  CycloRat(Rational c0, Rational c1, Rational c2, Rational c3) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// z^k for any integer k.
  static CycloRat zeta(int k);
  static CycloRat i() { return zeta(2); }
  static CycloRat sqrt2() { return {0, 1, 0, -1}; }

  const Rational& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  /// Image under the automorphism z -> z^k, k odd.
  CycloRat galois(int k) const;
  CycloRat inverse() const;

  CycloRat& operator+=(const CycloRat& o);
  CycloRat& operator-=(const CycloRat& o);
  CycloRat& operator*=(const CycloRat& o);
  CycloRat& operator/=(const CycloRat& o) { return *this *= o.inverse(); }
  friend CycloRat operator+(CycloRat a, const CycloRat& b) { return a += b; }
  friend CycloRat operator-(CycloRat a, const CycloRat& b) { return a -= b; }
  friend CycloRat operator*(CycloRat a, const CycloRat& b) { return a *= b; }
  friend CycloRat operator/(CycloRat a, const CycloRat& b) { return a /= b; }
  CycloRat operator-() const { return CycloRat(-c_[0], -c_[1], -c_[2], -c_[3]); }
  friend bool operator==(const CycloRat& a, const CycloRat& b) { return a.c_ == b.c_; }

  /// "p/q" for rationals, otherwise "[c0,c1,c2,c3]".
  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

}  // namespace isocodes
