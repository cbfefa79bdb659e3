#pragma once

// Bit-packed vectors and matrices over F2.
//
// Coordinate i of a vector lives in bit (i % 64) of word (i / 64). Strings are
// written coordinate 0 first, so "1000" has its single one in coordinate 0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace isocodes {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Permutation of coordinates: coordinate i moves to position perm[i].
using Permutation = std::vector<std::uint32_t>;

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len);

  static BitVec ones(std::size_t len);
  static BitVec unit(std::size_t len, std::size_t i);
  static BitVec from_string(std::string_view bits);
  /// Length <= 64 only; bits beyond len are discarded.
  static BitVec from_word(std::size_t len, Word w);

  std::size_t size() const { return len_; }
  std::size_t num_words() const { return words_.size(); }
  std::span<const Word> words() const { return {words_.data(), words_.size()}; }
  /// First word, or 0 for the empty vector. The fast path for len <= 64.
  Word word0() const { return words_.empty() ? 0 : words_[0]; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const;
  bool parity() const { return weight() & 1U; }
  bool is_zero() const;
  /// Index of the lowest set coordinate, or size() if zero.
  std::size_t first_set() const;
  std::vector<std::size_t> support() const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.len_ == b.len_ && a.words_ == b.words_;
  }
  /// Orders by length, then by packed value (coordinate 0 least significant).
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

  std::string to_string() const;

 private:
  void check_same_length(const BitVec& other) const;

  std::size_t len_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

std::size_t weight(const BitVec& v);
bool parity(const BitVec& v);
/// Sum of u_i v_i mod 2.
bool dot(const BitVec& u, const BitVec& v);
/// The alternating form u.v + p(u)p(v).
bool alt_inner(const BitVec& u, const BitVec& v);
/// Coordinate-wise product (bitwise AND).
BitVec pointwise_product(const BitVec& u, const BitVec& v);
/// out[perm[i]] = v[i].
BitVec permute(const BitVec& v, std::span<const std::uint32_t> perm);
/// Concatenation, coordinates of a first.
BitVec concat(const BitVec& a, const BitVec& b);
/// Restriction to the listed coordinates, in the listed order.
BitVec project(const BitVec& v, std::span<const std::size_t> coords);

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t ncols) : ncols_(ncols) {}
  BitMatrix(std::size_t ncols, std::vector<BitVec> rows);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_strings(std::size_t ncols, const std::vector<std::string>& rows);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<BitVec>& rows() const { return rows_; }
  void append_row(BitVec r);

  /// Vector of row_i . v over all rows.
  BitVec mul(const BitVec& v) const;
  BitVec row_sum() const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;
  friend std::strong_ordering operator<=>(const BitMatrix& a, const BitMatrix& b);

 private:
  std::size_t ncols_ = 0;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  BitMatrix matrix;  // rank rows, zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const BitMatrix& m);
/// Basis of {v : m.v = 0}; ncols - rank rows.
BitMatrix kernel(const BitMatrix& m);
bool row_space_contains(const BitMatrix& m, const BitVec& v);

/// Reduces v against rows of a matrix already in rref with the given pivots.
BitVec reduce(const BitMatrix& reduced, std::span<const std::size_t> pivots, BitVec v);

}  // namespace isocodes
