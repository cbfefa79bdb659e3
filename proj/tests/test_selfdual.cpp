#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "isocodes/equivalence.hpp"
#include "isocodes/errors.hpp"
#include "isocodes/selfdual.hpp"
#include "oracles.hpp"

using namespace isocodes;

TEST_CASE("t_n against direct enumeration") {
  CHECK(t_n(2) == 1);
  CHECK(t_n(4) == 3);
  CHECK(t_n(8) == 135);
  for (std::size_t n : {2, 4, 6}) {
    std::size_t count = 0;
    for (const auto& c : oracle::all_subspaces(n)) count += is_self_dual(c) ? 1 : 0;
    CHECK(Integer(count) == t_n(n));
  }
  CHECK_THROWS(t_n(5));
}

TEST_CASE("generated representatives are complete and inequivalent") {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 2, 3, 4};
  for (std::size_t n = 2; n <= 14; n += 2) {
    const SelfDualSet sd = generate_selfdual_reps(n, Exec{false, 1});
    CHECK(sd.reps.size() == expected[n / 2]);
    CHECK(selfdual_mass(sd).pass());
    for (std::size_t i = 0; i < sd.reps.size(); ++i) {
      CHECK(is_self_dual(sd.reps[i]));
      if (n <= 8) CHECK(sd.aut_orders[i] == brute_force_aut_order(sd.reps[i]));
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_equivalent(sd.reps[i], sd.reps[j]));
    }
  }
}

TEST_CASE("brute-force class count at n = 6") {
  std::vector<LinearCode> classes;
  for (const auto& c : oracle::all_subspaces(6)) {
    if (!is_self_dual(c)) continue;
    bool seen = false;
    for (const auto& r : classes) seen = seen || brute_force_equivalent(r, c);
    if (!seen) classes.push_back(c);
  }
  CHECK(classes.size() == generate_selfdual_reps(6).reps.size());
}

TEST_CASE("serial and parallel generation agree") {
  const SelfDualSet a = generate_selfdual_reps(12, Exec{false, 1});
  const SelfDualSet b = generate_selfdual_reps(12, Exec{true, 4});
  CHECK(a.reps == b.reps);
  CHECK(a.aut_orders == b.aut_orders);
}

TEST_CASE("database round trip") {
  const SelfDualSet sd = generate_selfdual_reps(10);
  std::stringstream ss;
  write_selfdual_set(ss, sd);
  const SelfDualSet back = parse_selfdual_db(ss);
  CHECK(back.reps == sd.reps);
}

TEST_CASE("database rejections") {
  std::stringstream missing("4 2\n1100\n0011\n");  // i2^2 alone already has mass 3 = T_4
  CHECK(parse_selfdual_db(missing).reps.size() == 1);
  std::stringstream dup("4 2\n1100\n0011\n%\n4 2\n1010\n0101\n");
  CHECK_THROWS_AS(parse_selfdual_db(dup), VerificationFailure);
  std::stringstream not_sd("4 2\n1000\n0100\n");
  CHECK_THROWS_AS(parse_selfdual_db(not_sd), VerificationFailure);
  std::stringstream short_mass("8 4\n11000000\n00110000\n00001100\n00000011\n");
  CHECK_THROWS_AS(parse_selfdual_db(short_mass), VerificationFailure);
  std::stringstream bad("4 2\n1100\n00x1\n");
  CHECK_THROWS_AS(parse_selfdual_db(bad), ParseError);
}

TEST_CASE("normalize_ones_first") {
  for (std::size_t n = 2; n <= 10; n += 2) {
    for (const auto& k : generate_selfdual_reps(n).reps) {
      const BitMatrix g = normalize_ones_first(k);
      BitVec acc(n);
      for (const auto& r : g.rows()) acc ^= r;
      CHECK(acc == BitVec::ones(n));
      CHECK(LinearCode(g) == k);
    }
  }
}

TEST_CASE("cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "isocodes_test_cache";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("ISOCODES_CACHE_DIR", dir.c_str(), 1);
  const SelfDualSet a = cached_selfdual_reps(8);
  CHECK(std::filesystem::exists(dir / "selfdual_8.txt"));
  const SelfDualSet b = cached_selfdual_reps(8);
  CHECK(a.reps == b.reps);
  ::unsetenv("ISOCODES_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
