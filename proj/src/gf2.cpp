#include "isocodes/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace isocodes {

namespace {

std::size_t words_for(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

Word tail_mask(std::size_t len) {
  const std::size_t r = len % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

}  // namespace

BitVec::BitVec(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVec BitVec::ones(std::size_t len) {
  BitVec v(len);
  for (auto& w : v.words_) w = ~Word{0};
  if (!v.words_.empty()) v.words_.back() &= tail_mask(len);
  return v;
}

BitVec BitVec::unit(std::size_t len, std::size_t i) {
  if (i >= len) throw std::out_of_range("unit vector index out of range");
  BitVec v(len);
  v.set(i);
  return v;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return v;
}

BitVec BitVec::from_word(std::size_t len, Word w) {
  if (len > kWordBits) throw std::invalid_argument("from_word requires len <= 64");
  BitVec v(len);
  if (len > 0) v.words_[0] = w & tail_mask(len);
  return v;
}

void BitVec::set(std::size_t i, bool value) {
  const Word bit = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

std::size_t BitVec::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return len_;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (Word x = words_[i]; x != 0; x &= x - 1) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
    }
  }
  return out;
}

void BitVec::check_same_length(const BitVec& other) const {
  if (len_ != other.len_) throw std::invalid_argument("vector length mismatch");
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  if (auto c = a.len_ <=> b.len_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t weight(const BitVec& v) { return v.weight(); }
bool parity(const BitVec& v) { return v.parity(); }

bool dot(const BitVec& u, const BitVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vector length mismatch");
  unsigned acc = 0;
  auto a = u.words();
  auto b = v.words();
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<unsigned>(std::popcount(a[i] & b[i]));
  return acc & 1U;
}

bool alt_inner(const BitVec& u, const BitVec& v) {
  return dot(u, v) ^ (u.parity() && v.parity());
}

BitVec pointwise_product(const BitVec& u, const BitVec& v) { return u & v; }

BitVec permute(const BitVec& v, std::span<const std::uint32_t> perm) {
  if (perm.size() != v.size()) throw std::invalid_argument("permutation size mismatch");
  BitVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) out.set(perm[i]);
  }
  return out;
}

BitVec concat(const BitVec& a, const BitVec& b) {
  BitVec out(a.size() + b.size());
  for (std::size_t i : a.support()) out.set(i);
  for (std::size_t i : b.support()) out.set(a.size() + i);
  return out;
}

BitVec project(const BitVec& v, std::span<const std::size_t> coords) {
  BitVec out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (v.get(coords[i])) out.set(i);
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t ncols, std::vector<BitVec> rows) : ncols_(ncols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != ncols_) throw std::invalid_argument("matrix rows must share ncols");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_.push_back(BitVec::unit(n, i));
  return m;
}

BitMatrix BitMatrix::from_strings(std::size_t ncols, const std::vector<std::string>& rows) {
  BitMatrix m(ncols);
  for (const auto& s : rows) m.append_row(BitVec::from_string(s));
  return m;
}

void BitMatrix::append_row(BitVec r) {
  if (r.size() != ncols_) throw std::invalid_argument("row width does not match matrix");
  rows_.push_back(std::move(r));
}

BitVec BitMatrix::mul(const BitVec& v) const {
  if (v.size() != ncols_) throw std::invalid_argument("matrix-vector width mismatch");
  BitVec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (dot(rows_[i], v)) out.set(i);
  }
  return out;
}

BitVec BitMatrix::row_sum() const {
  BitVec s(ncols_);
  for (const auto& r : rows_) s ^= r;
  return s;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

std::strong_ordering operator<=>(const BitMatrix& a, const BitMatrix& b) {
  if (auto c = a.ncols_ <=> b.ncols_; c != 0) return c;
  if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (auto c = a.rows_[i] <=> b.rows_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVec> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.ncols() && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return {BitMatrix(m.ncols(), std::move(rows)), rank, std::move(pivots)};
}

BitMatrix kernel(const BitMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.ncols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  BitMatrix out(m.ncols());
  for (std::size_t free = 0; free < m.ncols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v = BitVec::unit(m.ncols(), free);
    for (std::size_t i = 0; i < r.rank; ++i) {
      if (r.matrix.row(i).get(free)) v.set(r.pivots[i]);
    }
    out.append_row(std::move(v));
  }
  return out;
}

BitVec reduce(const BitMatrix& reduced, std::span<const std::size_t> pivots, BitVec v) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (v.get(pivots[i])) v ^= reduced.row(i);
  }
  return v;
}

bool row_space_contains(const BitMatrix& m, const BitVec& v) {
  if (v.size() != m.ncols()) throw std::invalid_argument("vector width does not match matrix");
  const RrefResult r = rref(m);
  return reduce(r.matrix, r.pivots, v).is_zero();
}

}  // namespace isocodes
