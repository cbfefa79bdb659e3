#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isocodes/classify.hpp"
#include "isocodes/equivalence.hpp"
#include "isocodes/errors.hpp"
#include "oracles.hpp"

using namespace isocodes;

namespace {

// Classes among all subspaces passing pred, by exhaustive equivalence.
template <class Pred>
std::vector<LinearCode> brute_classes(std::size_t n, Pred pred, std::size_t& total) {
  std::vector<LinearCode> classes;
  total = 0;
  for (const auto& c : oracle::all_subspaces(n)) {
    if (!pred(c)) continue;
    ++total;
    bool seen = false;
    for (const auto& r : classes) seen = seen || brute_force_equivalent(r, c);
    if (!seen) classes.push_back(c);
  }
  return classes;
}

}  // namespace

TEST_CASE("known table rows") {
  const std::vector<TableRow> rows{
      {2, 0, 1, 1, 0, 1},  {4, 1, 0, 1, 1, 0},   {6, 1, 1, 3, 0, 1},
      {8, 2, 2, 3, 0, 1},  {10, 5, 2, 4, 0, 1},  {12, 11, 0, 3, 3, 0},
  };
  for (const auto& want : rows) {
    const SelfDualSet sd = generate_selfdual_reps(want.n);
    const auto classes = classify_odd_lagrangians(sd);
    CHECK(table_row(classes, want.n) == want);
    CHECK(verify_odd_mass(classes, want.n).pass());
  }
}

TEST_CASE("odd Lagrangians against exhaustive enumeration") {
  for (std::size_t n : {2, 4, 6}) {
    std::size_t total = 0;
    const auto brute = brute_classes(n, [](const LinearCode& c) { return is_odd_lagrangian(c); }, total);
    const auto classes = classify_odd_lagrangians(generate_selfdual_reps(n));
    CHECK(classes.size() == brute.size());
    Rational orbit_sum = 0;
    for (const auto& k : classes) {
      CHECK(is_odd_lagrangian(k.rep));
      CHECK(k.aut_order == brute_force_aut_order(k.rep));
      CHECK(k.weights == oracle::weight_distribution(k.rep));
      orbit_sum += Rational(factorial(n), k.aut_order);
    }
    CHECK(orbit_sum == Rational(total));
  }
}

TEST_CASE("odd length against exhaustive enumeration") {
  for (std::size_t n : {1, 3, 5, 7}) {
    std::size_t total = 0;
    const auto brute = brute_classes(n, [](const LinearCode& c) { return is_max_totally_isotropic(c); }, total);
    const auto classes = classify_odd_length(generate_selfdual_reps(n + 1));
    CHECK(classes.size() == brute.size());
    CHECK(verify_odd_length_mass(classes, n).pass());
    Rational orbit_sum = 0;
    for (const auto& k : classes) orbit_sum += Rational(factorial(n), k.aut_order);
    CHECK(orbit_sum == Rational(total));
  }
}

TEST_CASE("classes are canonical, sorted and pairwise inequivalent") {
  for (std::size_t n : {8, 10, 12}) {
    const auto classes = classify_odd_lagrangians(generate_selfdual_reps(n));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK(canonical_form(classes[i].rep).canon == classes[i].rep.generators());
      CHECK(classes[i].min_distance == classes[i].rep.min_distance());
      CHECK(classes[i].type == type_of(classes[i].rep));
      if (i > 0) CHECK(classes[i - 1].rep.generators() < classes[i].rep.generators());
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_equivalent(classes[i].rep, classes[j].rep));
    }
  }
}

TEST_CASE("serial and parallel classification agree") {
  const SelfDualSet sd = generate_selfdual_reps(12);
  const auto a = classify_odd_lagrangians(sd, Exec{false, 1});
  const auto b = classify_odd_lagrangians(sd, Exec{true, 3});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rep == b[i].rep);
    CHECK(a[i].aut_order == b[i].aut_order);
  }
}

TEST_CASE("complements and the odd pair") {
  const LinearCode e8 = named::e8();
  const auto comps = complements_of_ones(e8);
  REQUIRE_FALSE(comps.empty());
  for (const LinearCode& k0 : comps) {
    CHECK(k0.dimension() == 3);
    CHECK_FALSE(k0.contains_ones());
    CHECK(are_equivalent(extend(k0, BitVec::ones(8)), e8));
    const auto [l, lp] = odd_pair_from_complement(k0);
    CHECK(is_odd_lagrangian(l));
    CHECK(is_odd_lagrangian(lp));
    CHECK(even_subcode(l) == k0);
    CHECK(even_subcode(lp) == k0);
    CHECK_FALSE(l == lp);
  }
}

TEST_CASE("duplicate weight distributions are reported") {
  const auto classes = classify_odd_lagrangians(generate_selfdual_reps(12));
  for (const auto& g : duplicate_weight_distributions(classes)) {
    REQUIRE(g.size() >= 2);
    for (std::size_t i : g) CHECK(classes[i].weights == classes[g.front()].weights);
  }
}
