#include "isocodes/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "isocodes/errors.hpp"

namespace isocodes {

namespace {

void check_cap(std::size_t k) {
  if (k > kEnumerationCap) {
    throw CapExceeded("dimension " + std::to_string(k) + " exceeds enumeration cap " +
                      std::to_string(kEnumerationCap));
  }
}

// Gray-code walk, one XOR per codeword. Single-word codes take the fast path.
std::vector<std::uint64_t> enumerate_weights(const BitMatrix& g) {
  const std::size_t n = g.ncols();
  const std::size_t k = g.nrows();
  check_cap(k);
  std::vector<std::uint64_t> dist(n + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << k;
  if (n <= kWordBits) {
    std::vector<Word> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = g.row(i).word0();
    Word cur = 0;
    dist[0] = 1;
    for (std::uint64_t step = 1; step < total; ++step) {
      cur ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
      ++dist[static_cast<std::size_t>(std::popcount(cur))];
    }
    return dist;
  }
  BitVec cur(n);
  dist[0] = 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    cur ^= g.row(static_cast<std::size_t>(std::countr_zero(step)));
    ++dist[cur.weight()];
  }
  return dist;
}

}  // namespace

LinearCode::LinearCode(std::size_t n) : gens_(n), derived_(std::make_shared<Derived>()) {}

LinearCode::LinearCode(const BitMatrix& generators) : derived_(std::make_shared<Derived>()) {
  RrefResult r = rref(generators);
  gens_ = std::move(r.matrix);
  pivots_ = std::move(r.pivots);
}

LinearCode::LinearCode(std::size_t n, const std::vector<BitVec>& generators)
    : LinearCode(BitMatrix(n, generators)) {}

LinearCode LinearCode::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_strings needs at least one row to fix the length");
  return LinearCode(BitMatrix::from_strings(rows.front().size(), rows));
}

LinearCode LinearCode::full_space(std::size_t n) { return LinearCode(BitMatrix::identity(n)); }

bool LinearCode::contains(const BitVec& v) const {
  if (v.size() != length()) throw std::invalid_argument("vector length does not match code");
  return reduce(gens_, pivots_, v).is_zero();
}

bool LinearCode::contains_ones() const { return contains(BitVec::ones(length())); }

bool LinearCode::is_even() const {
  return std::none_of(gens_.rows().begin(), gens_.rows().end(), [](const BitVec& r) { return r.parity(); });
}

std::vector<BitVec> LinearCode::codewords() const {
  check_cap(dimension());
  const std::uint64_t total = std::uint64_t{1} << dimension();
  std::vector<BitVec> out;
  out.reserve(total);
  BitVec cur(length());
  out.push_back(cur);
  for (std::uint64_t step = 1; step < total; ++step) {
    cur ^= gens_.row(static_cast<std::size_t>(std::countr_zero(step)));
    out.push_back(cur);
  }
  return out;
}

const std::vector<std::uint64_t>& LinearCode::weight_distribution() const {
  std::call_once(derived_->once, [this] { derived_->distribution = enumerate_weights(gens_); });
  return derived_->distribution;
}

std::size_t LinearCode::min_distance() const {
  const auto& a = weight_distribution();
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] != 0) return i;
  }
  return 0;
}

std::string to_string(CodeType t) { return t == CodeType::TypeII ? "II" : "I"; }

LinearCode dual_dot(const LinearCode& c) { return LinearCode(kernel(c.generators())); }

LinearCode perp_alt(const LinearCode& c) {
  // <v,w> = v . tau(w)
  return dual_dot(apply_transvection(c));
}

LinearCode even_subcode(const LinearCode& c) {
  const auto& rows = c.generators().rows();
  auto odd = std::find_if(rows.begin(), rows.end(), [](const BitVec& r) { return r.parity(); });
  if (odd == rows.end()) return c;
  std::vector<BitVec> out;
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    if (it == odd) continue;
    out.push_back(it->parity() ? *it ^ *odd : *it);
  }
  return LinearCode(c.length(), out);
}

LinearCode extend(const LinearCode& c, const BitVec& v) {
  std::vector<BitVec> rows = c.generators().rows();
  rows.push_back(v);
  return LinearCode(c.length(), rows);
}

LinearCode sum(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length()) throw std::invalid_argument("code length mismatch");
  std::vector<BitVec> rows = a.generators().rows();
  rows.insert(rows.end(), b.generators().rows().begin(), b.generators().rows().end());
  return LinearCode(a.length(), rows);
}

bool is_totally_isotropic(const LinearCode& c) {
  const auto& g = c.generators().rows();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (alt_inner(g[i], g[j])) return false;
    }
  }
  return true;
}

bool is_max_totally_isotropic(const LinearCode& c) {
  const std::size_t n = c.length();
  if (!is_totally_isotropic(c)) return false;
  if (n % 2 == 0) return c.dimension() == n / 2;
  return c.dimension() == (n + 1) / 2 && c.contains_ones();
}

bool is_lagrangian(const LinearCode& c) { return c.length() % 2 == 0 && is_max_totally_isotropic(c); }

bool is_odd_lagrangian(const LinearCode& c) { return is_lagrangian(c) && !c.is_even(); }

bool is_self_dual(const LinearCode& c) {
  return 2 * c.dimension() == c.length() && dual_dot(c) == c;
}

CodeType type_of(const LinearCode& c) {
  // All weights of a code are 0 mod 4 iff its generators are, and pairwise
  // intersections are even.
  const LinearCode even = even_subcode(c);
  const auto& g = even.generators().rows();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].weight() % 4 != 0) return CodeType::TypeI;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (dot(g[i], g[j])) return CodeType::TypeI;
    }
  }
  return CodeType::TypeII;
}

BitVec transvection(const BitVec& v) {
  return v.parity() ? v ^ BitVec::ones(v.size()) : v;
}

LinearCode apply_transvection(const LinearCode& c) {
  std::vector<BitVec> rows;
  rows.reserve(c.dimension());
  for (const auto& r : c.generators().rows()) rows.push_back(transvection(r));
  return LinearCode(c.length(), rows);
}

LinearCode direct_product(const LinearCode& a, const LinearCode& b) {
  std::vector<BitVec> rows;
  const BitVec za(a.length());
  const BitVec zb(b.length());
  for (const auto& r : a.generators().rows()) rows.push_back(concat(r, zb));
  for (const auto& r : b.generators().rows()) rows.push_back(concat(za, r));
  return LinearCode(a.length() + b.length(), rows);
}

LinearCode permute(const LinearCode& c, std::span<const std::uint32_t> perm) {
  std::vector<BitVec> rows;
  for (const auto& r : c.generators().rows()) rows.push_back(permute(r, perm));
  return LinearCode(c.length(), rows);
}

LinearCode project(const LinearCode& c, std::span<const std::size_t> coords) {
  std::vector<BitVec> rows;
  for (const auto& r : c.generators().rows()) rows.push_back(project(r, coords));
  return LinearCode(coords.size(), rows);
}

LinearCode shorten(const LinearCode& c, std::size_t j) {
  if (j >= c.length()) throw std::out_of_range("shorten: coordinate out of range");
  const auto& g = c.generators().rows();
  auto hit = std::find_if(g.begin(), g.end(), [j](const BitVec& r) { return r.get(j); });
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i != j) keep.push_back(i);
  }
  std::vector<BitVec> rows;
  for (auto it = g.begin(); it != g.end(); ++it) {
    if (it == hit) continue;
    BitVec r = (hit != g.end() && it->get(j)) ? *it ^ *hit : *it;
    rows.push_back(project(r, keep));
  }
  return LinearCode(keep.size(), rows);
}

namespace named {

LinearCode i1() { return LinearCode::from_strings({"1"}); }
LinearCode i2() { return LinearCode::from_strings({"11"}); }
LinearCode i2_prime() { return LinearCode::from_strings({"10"}); }

LinearCode hamming7() {
  return LinearCode::from_strings({"1110000", "1001100", "0101010", "1101001"});
}

LinearCode e7() { return even_subcode(hamming7()); }

LinearCode e8() {
  return LinearCode::from_strings({"10000111", "01001011", "00101101", "00011110"});
}

LinearCode power(const LinearCode& c, std::size_t k) {
  LinearCode out(0);
  for (std::size_t i = 0; i < k; ++i) out = direct_product(out, c);
  return out;
}

}  // namespace named

}  // namespace isocodes
