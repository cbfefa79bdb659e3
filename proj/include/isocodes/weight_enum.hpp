#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isocodes/bigint.hpp"
#include "isocodes/code.hpp"

namespace isocodes {

/// Homogeneous W(x,y) = sum A_i x^i y^(n-i) with exact integer coefficients.
class WeightEnumerator {
 public:
  WeightEnumerator() = default;
  explicit WeightEnumerator(std::size_t n) : coeffs_(n + 1, 0) {}
  explicit WeightEnumerator(std::vector<Integer> coeffs);
  static WeightEnumerator from_distribution(const std::vector<std::uint64_t>& a);

  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// W(y, x).
  WeightEnumerator swapped() const;
  bool is_symmetric() const { return *this == swapped(); }

  friend WeightEnumerator operator+(const WeightEnumerator& a, const WeightEnumerator& b);
  friend bool operator==(const WeightEnumerator& a, const WeightEnumerator& b) = default;

  /// "y^8 + 14x^4y^4 + x^8", terms by increasing power of x.
  std::string to_string() const;
  /// "A0,A1,...,An".
  std::string to_csv() const;

 private:
  std::vector<Integer> coeffs_;
};

/// Raised when a transform would leave the integers, which means the input
/// did not come from a code of the stated dimension.
class NonIntegralTransform : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

WeightEnumerator wenum(const LinearCode& c);
WeightEnumerator even_part(const WeightEnumerator& w);
WeightEnumerator odd_part(const WeightEnumerator& w);

/// (1/2^k) W(y-x, y+x).
WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t k);
/// (1/2^k) [W+(y-x, y+x) + W-(y+x, y-x)], the enumerator of the complement
/// under the alternating form.
WeightEnumerator macwilliams_type(const WeightEnumerator& w, std::size_t k);

/// P_k(i; n) = sum_j (-1)^j C(i,j) C(n-i,k-j).
Integer krawtchouk(std::size_t k, std::size_t i, std::size_t n);
/// Complement distribution from Krawtchouk sums: even k uses P_k, odd k uses P_(n-k).
std::vector<Integer> perp_weights_via_krawtchouk(const std::vector<Integer>& a, std::size_t n, std::size_t k);

}  // namespace isocodes
