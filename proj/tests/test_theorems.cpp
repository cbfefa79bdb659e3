#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isocodes/classify.hpp"
#include "isocodes/theorems.hpp"

using namespace isocodes;

namespace {

void require_all(const LinearCode& c, std::size_t expected_reports) {
  const auto reports = applicable_theorems(c);
  CHECK(reports.size() == expected_reports);
  for (const auto& r : reports) {
    INFO(r.theorem << " n=" << r.n << " failed: " << r.failures());
    CHECK(r.pass());
  }
}

}  // namespace

TEST_CASE("every classified code satisfies its theorems") {
  for (std::size_t n = 2; n <= 14; n += 2) {
    const SelfDualSet sd = generate_selfdual_reps(n);
    for (const auto& k : classify_odd_lagrangians(sd)) require_all(k.rep, k.type == CodeType::TypeII ? 2 : 1);
    for (const auto& k : classify_odd_length(sd)) require_all(k.rep, k.type == CodeType::TypeII ? 2 : 1);
    for (const auto& k : sd.reps) require_all(k, 1);
  }
}

TEST_CASE("named examples") {
  require_all(named::hamming7(), 2);  // odd length 7, Type II
  require_all(named::e8(), 1);
  const auto t = check_thm_selfdual(named::e8());
  CHECK(t.checks.size() == 3);
  require_all(named::i1(), 2);  // trivially Type II
}

TEST_CASE("both odd-weight residues occur at n = 8") {
  bool seen1 = false, seen3 = false;
  for (const auto& k : classify_odd_lagrangians(generate_selfdual_reps(8))) {
    if (k.type != CodeType::TypeII) continue;
    const auto& a = k.weights;
    for (std::size_t i = 1; i < a.size(); i += 2) {
      if (a[i] == 0) continue;
      (i % 4 == 1 ? seen1 : seen3) = true;
    }
  }
  CHECK(seen1);
  CHECK(seen3);
}

TEST_CASE("hypotheses are enforced") {
  CHECK_THROWS(check_thm_odd_general(named::e8()));
  CHECK_THROWS(check_thm_even_general(named::e8()));
  CHECK_THROWS(check_thm_even_typeII(LinearCode::from_strings({"100000", "010100", "001010"})));
  CHECK_THROWS(check_thm_selfdual(named::i2_prime()));
  CHECK(applicable_theorems(LinearCode::from_strings({"1100"})).empty());
}

TEST_CASE("failures are reported by name") {
  TheoremReport r{"x", 2, {{"good", true}, {"bad one", false}, {"bad two", false}}};
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == "bad one, bad two");
}

TEST_CASE("printed generator tables: one membership counterexample at n = 10") {
  std::size_t membership_failures = 0;
  for (const auto& k : classify_odd_lagrangians(generate_selfdual_reps(10))) {
    if (k.type != CodeType::TypeII) continue;
    const auto printed = check_thm_even_typeII(k.rep, GeneratorTable::AsPrinted);
    const auto fixed = check_thm_even_typeII(k.rep, GeneratorTable::Corrected);
    CHECK(fixed.pass());
    bool member_fail = false;
    for (const auto& c : printed.checks) {
      if (!c.pass && c.name.find(" in ") != std::string::npos) member_fail = true;
    }
    if (member_fail) {
      ++membership_failures;
      CHECK(k.weights == std::vector<std::uint64_t>{1, 0, 0, 0, 10, 16, 0, 0, 5, 0, 0});
    }
  }
  CHECK(membership_failures == 1);
}

TEST_CASE("printed tables are not covariant in the flagged columns") {
  // n = 8 and n = 14 Type II classes: the printed tables fail only covariance
  for (std::size_t n : {8, 14}) {
    for (const auto& k : classify_odd_lagrangians(generate_selfdual_reps(n))) {
      if (k.type != CodeType::TypeII) continue;
      const auto printed = check_thm_even_typeII(k.rep, GeneratorTable::AsPrinted);
      for (const auto& c : printed.checks) {
        if (c.name.find("transforms") == std::string::npos) CHECK(c.pass);
      }
      CHECK_FALSE(printed.pass());
    }
  }
}
