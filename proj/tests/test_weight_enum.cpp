#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isocodes/weight_enum.hpp"
#include "oracles.hpp"

using namespace isocodes;

namespace {

WeightEnumerator brute(const LinearCode& c) {
  return WeightEnumerator::from_distribution(oracle::weight_distribution(c));
}

}  // namespace

TEST_CASE("to_string and csv") {
  CHECK(wenum(named::e8()).to_string() == "y^8 + 14x^4y^4 + x^8");
  CHECK(wenum(named::i2_prime()).to_string() == "y^2 + xy");
  CHECK(wenum(LinearCode(0)).to_string() == "1");
  CHECK(wenum(named::hamming7()).to_csv() == "1,0,0,7,7,0,0,1");
  CHECK(WeightEnumerator(std::vector<Integer>{0, -2, 0}).to_string() == "-2xy");
}

TEST_CASE("parts and symmetry") {
  const auto w = wenum(named::hamming7());
  CHECK(even_part(w) + odd_part(w) == w);
  CHECK(even_part(w).to_csv() == "1,0,0,0,7,0,0,0");
  CHECK(w.is_symmetric());
  CHECK_FALSE(wenum(named::i2_prime()).is_symmetric());
}

TEST_CASE("krawtchouk values") {
  // P_k(0; n) = C(n, k) and P_1(i; n) = n - 2i
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 0; k <= n; ++k) CHECK(krawtchouk(k, 0, n) == binomial(n, k));
    for (std::size_t i = 0; i <= n; ++i) CHECK(krawtchouk(1, i, n) == Integer(n) - 2 * Integer(i));
  }
}

TEST_CASE("transforms agree with brute-force complements on random codes") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t k = rng() % (n + 1);
    const LinearCode c = oracle::random_code(rng, n, k);
    const auto w = wenum(c);
    REQUIRE(w == brute(c));
    const std::size_t dim = c.dimension();
    const auto alt = brute(oracle::perp_alt(c));
    CHECK(macwilliams_type(w, dim) == alt);
    CHECK(perp_weights_via_krawtchouk(w.coeffs(), n, dim) == alt.coeffs());
    CHECK(macwilliams(w, dim) == brute(oracle::dual_dot(c)));
  }
}

TEST_CASE("wrong dimension is rejected") {
  const auto w = wenum(named::hamming7());
  CHECK_THROWS_AS(macwilliams(w, 5), NonIntegralTransform);
  CHECK(macwilliams(w, 4) == wenum(named::e7()));
}
