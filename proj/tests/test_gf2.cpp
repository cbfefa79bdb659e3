#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isocodes/gf2.hpp"

using namespace isocodes;

namespace {

BitVec bv(const char* s) { return BitVec::from_string(s); }

// popcount by walking characters, independent of the packed words
std::size_t naive_weight(const BitVec& v) {
  std::size_t w = 0;
  for (char c : v.to_string()) w += c == '1';
  return w;
}

BitVec random_vec(std::mt19937_64& rng, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) v.set(i);
  }
  return v;
}

}  // namespace

TEST_CASE("weight and parity") {
  CHECK(weight(bv("0000000")) == 0);
  CHECK(weight(bv("1000")) == 1);
  CHECK(weight(bv("1110000")) == 3);
  CHECK(parity(BitVec::ones(8)) == 0);
  CHECK(parity(BitVec::ones(7)) == 1);
  CHECK(parity(bv("1011")) == 1);
}

TEST_CASE("string round trip keeps coordinate 0 first") {
  const BitVec v = bv("1000");
  CHECK(v.get(0));
  CHECK(v.word0() == 1);
  CHECK(v.to_string() == "1000");
  CHECK_THROWS(BitVec::from_string("10a0"));
}

TEST_CASE("multi-word vectors") {
  BitVec v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.weight() == 3);
  CHECK(v.num_words() == 3);
  CHECK(v.support() == std::vector<std::size_t>{0, 64, 129});
  CHECK(BitVec::ones(130).weight() == 130);
  CHECK(dot(v, BitVec::ones(130)) == 1);
}

TEST_CASE("dot and alternating form") {
  CHECK(dot(bv("1100"), bv("1100")) == 0);
  CHECK(dot(bv("1000"), bv("1110")) == 1);
  CHECK(dot(bv("0000"), bv("1011")) == 0);
  CHECK(alt_inner(bv("1000"), bv("0100")) == 1);
  CHECK(alt_inner(bv("1100"), bv("1010")) == 1);
  CHECK_THROWS(dot(bv("10"), bv("100")));
}

TEST_CASE("pointwise product") {
  CHECK(pointwise_product(bv("1100"), bv("0110")) == bv("0100"));
  const BitVec v = bv("1011");
  CHECK(pointwise_product(v, BitVec::ones(4)) == v);
  CHECK(pointwise_product(v, v) == v);
}

TEST_CASE("form identities exhaustive for n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Word lim = Word{1} << n;
    for (Word a = 0; a < lim; ++a) {
      const BitVec u = BitVec::from_word(n, a);
      CHECK(naive_weight(u) == u.weight());
      CHECK(alt_inner(u, u) == 0);
      for (Word b = 0; b < lim; ++b) {
        const BitVec v = BitVec::from_word(n, b);
        CHECK(dot(u, v) == parity(pointwise_product(u, v)));
        CHECK(alt_inner(u, v) == (parity(pointwise_product(u, v)) ^ (u.parity() && v.parity())));
        for (Word c = 0; c < lim; c += 3) {
          const BitVec w = BitVec::from_word(n, c);
          CHECK(alt_inner(u ^ w, v) == (alt_inner(u, v) ^ alt_inner(w, v)));
        }
      }
    }
  }
}

TEST_CASE("bilinearity randomized for larger n") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 7 + rng() % 90;
    const BitVec u = random_vec(rng, n), w = random_vec(rng, n), v = random_vec(rng, n);
    CHECK(alt_inner(u ^ w, v) == (alt_inner(u, v) ^ alt_inner(w, v)));
    CHECK(alt_inner(u, v) == alt_inner(v, u));
    CHECK(dot(u, v) == parity(u & v));
  }
}

TEST_CASE("rref") {
  const BitMatrix id = BitMatrix::identity(5);
  const RrefResult r = rref(id);
  CHECK(r.rank == 5);
  CHECK(r.matrix == id);

  const BitMatrix dup = BitMatrix::from_strings(4, {"1100", "0110", "1100"});
  CHECK(rref(dup).rank == 2);

  // both printed forms of the Hamming code
  const BitMatrix h1 = BitMatrix::from_strings(7, {"1110000", "1001100", "0101010", "1101001"});
  const BitMatrix h2 = BitMatrix::from_strings(7, {"1000011", "0100101", "0010110", "0001111"});
  CHECK(rref(h1).matrix == h2);
  CHECK(rref(h1).pivots == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("rref invariants on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 20;
    const std::size_t k = rng() % 12;
    BitMatrix m(n);
    for (std::size_t i = 0; i < k; ++i) m.append_row(random_vec(rng, n));
    const RrefResult r = rref(m);
    CHECK(rref(r.matrix).matrix == r.matrix);
    for (std::size_t i = 0; i < r.rank; ++i) {
      if (i > 0) CHECK(r.pivots[i] > r.pivots[i - 1]);
      for (std::size_t j = 0; j < r.rank; ++j) CHECK(r.matrix.row(j).get(r.pivots[i]) == (i == j));
    }
    const BitMatrix ker = kernel(m);
    CHECK(ker.nrows() + r.rank == n);
    CHECK(rref(ker).rank == ker.nrows());
    for (const auto& v : ker.rows()) CHECK(m.mul(v).is_zero());
    for (const auto& row : m.rows()) CHECK(row_space_contains(r.matrix, row));
  }
}

TEST_CASE("kernel edge cases") {
  CHECK(kernel(BitMatrix(6)).nrows() == 6);
  CHECK(kernel(BitMatrix::identity(6)).nrows() == 0);
  const BitMatrix e8 = BitMatrix::from_strings(8, {"10000111", "01001011", "00101101", "00011110"});
  CHECK(row_space_contains(e8, BitVec::ones(8)));
  CHECK_FALSE(row_space_contains(e8, bv("10000000")));
  CHECK(row_space_contains(e8, BitVec(8)));
}

TEST_CASE("permute, concat, project") {
  const Permutation p{2, 0, 1};
  CHECK(permute(bv("100"), p) == bv("001"));
  CHECK(concat(bv("10"), bv("011")) == bv("10011"));
  const std::vector<std::size_t> coords{3, 0};
  CHECK(project(bv("1001"), coords) == bv("11"));
}
