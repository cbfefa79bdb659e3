#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "isocodes/gf2.hpp"

namespace isocodes {

/// Largest dimension for which codewords are enumerated.
inline constexpr std::size_t kEnumerationCap = 24;

/// A binary linear [n,k] code held as a generator matrix in rref.
///
/// Derived data (weight distribution) is computed on first use and shared by
/// copies; the code itself never changes after construction.
class LinearCode {
 public:
  LinearCode() : LinearCode(0) {}
  /// The zero code of length n.
  explicit LinearCode(std::size_t n);
  /// Row space of the given generators (need not be independent).
  explicit LinearCode(const BitMatrix& generators);
  LinearCode(std::size_t n, const std::vector<BitVec>& generators);

  static LinearCode from_strings(const std::vector<std::string>& rows);
  static LinearCode full_space(std::size_t n);

  std::size_t length() const { return gens_.ncols(); }
  std::size_t dimension() const { return gens_.nrows(); }
  const BitMatrix& generators() const { return gens_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const BitVec& v) const;
  bool contains_ones() const;
  bool is_even() const;

  /// Every codeword, Gray-code order starting at zero. Throws CapExceeded above kEnumerationCap.
  std::vector<BitVec> codewords() const;
  /// A_0..A_n.
  const std::vector<std::uint64_t>& weight_distribution() const;
  /// Minimum nonzero weight; 0 for the zero code.
  std::size_t min_distance() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.gens_ == b.gens_; }

 private:
  struct Derived {
    std::once_flag once;
    std::vector<std::uint64_t> distribution;
  };

  BitMatrix gens_;
  std::vector<std::size_t> pivots_;
  std::shared_ptr<Derived> derived_;
};

enum class CodeType { TypeI, TypeII };

std::string to_string(CodeType t);

LinearCode dual_dot(const LinearCode& c);
/// Orthogonal complement under the alternating form.
LinearCode perp_alt(const LinearCode& c);
LinearCode even_subcode(const LinearCode& c);
/// c + <v>.
LinearCode extend(const LinearCode& c, const BitVec& v);
LinearCode sum(const LinearCode& a, const LinearCode& b);

bool is_totally_isotropic(const LinearCode& c);
bool is_max_totally_isotropic(const LinearCode& c);
bool is_lagrangian(const LinearCode& c);
bool is_odd_lagrangian(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

/// TypeII iff every word of the even subcode has weight divisible by 4.
CodeType type_of(const LinearCode& c);

/// v + p(v) 1.
BitVec transvection(const BitVec& v);
LinearCode apply_transvection(const LinearCode& c);

LinearCode direct_product(const LinearCode& a, const LinearCode& b);
LinearCode permute(const LinearCode& c, std::span<const std::uint32_t> perm);
/// Projection onto the listed coordinates.
LinearCode project(const LinearCode& c, std::span<const std::size_t> coords);
/// Codewords vanishing on coordinate j, with j deleted.
LinearCode shorten(const LinearCode& c, std::size_t j);

/// The fixed small codes used throughout.
namespace named {
LinearCode i1();        // {0, 1}
LinearCode i2();        // {00, 11}
LinearCode i2_prime();  // {00, 10}
LinearCode hamming7();  // H, parity bits in positions 1, 2, 4
LinearCode e7();        // even part of H
LinearCode e8();        // extended Hamming [8,4]
LinearCode power(const LinearCode& c, std::size_t k);
}  // namespace named

/// A code as read from text: the rows as written, before reduction.
struct CodeRecord {
  std::size_t n = 0;
  BitMatrix rows;
  std::size_t first_line = 0;
};

/// Reads the code text format: "n k", then k rows of n bits. '#' lines are
/// comments and blank lines are skipped. Throws ParseError.
CodeRecord parse_code_record(std::istream& in);
/// Reads '%'-separated records. Throws ParseError, including for zero records.
std::vector<CodeRecord> parse_code_records(std::istream& in);
void write_code_record(std::ostream& out, const BitMatrix& rows);
void write_code_records(std::ostream& out, const std::vector<BitMatrix>& records);

}  // namespace isocodes
