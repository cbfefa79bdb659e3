#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isocodes/cyclo.hpp"

namespace isocodes {

class WeightEnumerator;

/// Sparse polynomial in x, y over Q(z8). Zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (power of x, power of y)

  BiPoly() = default;
  BiPoly(const CycloRat& c);  // NOLINT: constants convert implicitly
  BiPoly(int c) : BiPoly(CycloRat(c)) {}  // NOLINT

  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly monomial(const CycloRat& c, unsigned i, unsigned j);
  static BiPoly from_enumerator(const WeightEnumerator& w);

  const std::map<Key, CycloRat>& terms() const { return terms_; }
  CycloRat coeff(unsigned i, unsigned j) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Total degree of a nonzero homogeneous polynomial.
  unsigned degree() const;

  /// f(a x + b y, c x + d y).
  BiPoly substitute(const CycloRat& a, const CycloRat& b, const CycloRat& c, const CycloRat& d) const;
  /// f(y, x).
  BiPoly swapped() const;
  BiPoly pow(unsigned e) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const CycloRat& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const CycloRat& s) { return a *= s; }
  friend BiPoly operator*(const CycloRat& s, BiPoly a) { return a *= s; }
  BiPoly operator-() const { return *this * CycloRat(-1); }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add(const Key& k, const CycloRat& c);
  std::map<Key, CycloRat> terms_;
};

/// 2x2 matrix over Q(z8), acting on (x, y) columns.
struct Matrix2 {
  CycloRat a, b, c, d;

  static Matrix2 identity() { return {1, 0, 0, 1}; }
  CycloRat det() const { return a * d - b * c; }
  Matrix2 inverse() const;
  friend Matrix2 operator*(const Matrix2& p, const Matrix2& q);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// (g.f)(u) = f(g^-1 u).
BiPoly act(const Matrix2& g, const BiPoly& f);

/// Every element of the group generated by gens (finite groups only).
std::vector<Matrix2> group_closure(const std::vector<Matrix2>& gens, std::size_t limit = 100000);

}  // namespace isocodes
