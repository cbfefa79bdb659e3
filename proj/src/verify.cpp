#include "isocodes/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "isocodes/decompose.hpp"
#include "isocodes/invariants.hpp"
#include "isocodes/theorems.hpp"
#include "isocodes/weight_enum.hpp"

namespace isocodes {

namespace {

std::string rows_of(const LinearCode& c) {
  std::string out;
  for (const auto& r : c.generators().rows()) out += (out.empty() ? "" : " ") + r.to_string();
  return out.empty() ? "(zero code)" : out;
}

std::string tag(std::size_t n) { return "n=" + std::to_string(n); }

void suite_mass(SuiteResult& res, std::size_t lo, std::size_t hi, Exec exec) {
  for (std::size_t n = lo; n <= hi; ++n) {
    if (n % 2 == 0) {
      const SelfDualSet sd = cached_selfdual_reps(n, exec);
      const MassCheck s = selfdual_mass(sd);
      res.checks.push_back({tag(n) + " self-dual sum n!/|Aut| = T_n", s.pass(),
                            to_fraction_string(s.lhs) + " vs " + to_fraction_string(s.rhs)});
      const MassCheck m = verify_odd_mass(classify_odd_lagrangians(sd, exec), n);
      res.checks.push_back({tag(n) + " odd Lagrangian sum 1/|Aut| = 2^(n/2) T_n / n!", m.pass(),
                            to_fraction_string(m.lhs) + " vs " + to_fraction_string(m.rhs)});
    } else {
      const MassCheck m = verify_odd_length_mass(classify_odd_length(cached_selfdual_reps(n + 1, exec), exec), n);
      res.checks.push_back({tag(n) + " odd length sum n!/|Aut| = T_(n+1)", m.pass(),
                            to_fraction_string(m.lhs) + " vs " + to_fraction_string(m.rhs)});
    }
  }
}

void suite_macwilliams(SuiteResult& res, std::size_t lo, std::size_t hi, Exec exec) {
  const LinearCode k = LinearCode::from_strings({"1000"});
  const WeightEnumerator fixture = macwilliams_type(wenum(k), k.dimension());
  res.checks.push_back({"fixture {0000,1000}", fixture.to_string() == "y^4 + xy^3 + 3x^2y^2 + 3x^3y", fixture.to_string()});
  std::mt19937_64 rng(2024);
  for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
    std::size_t bad = 0;
    std::string witness;
    for (int t = 0; t < 100; ++t) {
      const std::size_t kk = rng() % (n + 1);
      std::vector<BitVec> rows;
      for (std::size_t i = 0; i < kk; ++i) {
        BitVec v(n);
        for (std::size_t j = 0; j < n; ++j) {
          if (rng() & 1U) v.set(j);
        }
        rows.push_back(v);
      }
      const LinearCode c(n, rows);
      if (macwilliams_type(wenum(c), c.dimension()) != wenum(perp_alt(c))) {
        ++bad;
        witness = rows_of(c);
      }
    }
    res.checks.push_back({tag(n) + " 100 random codes", bad == 0, witness});
    if (n > 16) continue;
    std::size_t fixbad = 0;
    const auto classes = all_classes(n, exec);
    for (const auto& c : classes) {
      const WeightEnumerator w = wenum(c.rep);
      if (macwilliams_type(w, c.rep.dimension()) != w) {
        ++fixbad;
        witness = rows_of(c.rep);
      }
    }
    res.checks.push_back({tag(n) + " all " + std::to_string(classes.size()) + " classes are fixpoints", fixbad == 0,
                          fixbad ? witness : ""});
  }
}

void suite_theorems(SuiteResult& res, std::size_t lo, std::size_t hi, Exec exec) {
  for (std::size_t n = lo; n <= hi; ++n) {
    std::size_t checked = 0;
    for (const auto& c : all_classes(n, exec)) {
      for (const auto& r : applicable_theorems(c.rep)) {
        ++checked;
        if (!r.pass()) res.checks.push_back({tag(n) + " " + r.theorem, false, rows_of(c.rep) + ": " + r.failures()});
      }
    }
    res.checks.push_back({tag(n) + " " + std::to_string(checked) + " theorem checks", true, ""});
  }
}

void suite_semiinvariants(SuiteResult& res) {
  for (const auto& c : verify_semi_invariant_identities()) res.checks.push_back({c.name, c.pass, c.pass ? "" : "identity fails"});
}

void suite_decompose(SuiteResult& res, std::size_t lo, std::size_t hi, Exec exec) {
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto classes = all_classes(n, exec);
    std::size_t bad = 0;
    std::string witness;
    for (const auto& c : classes) {
      if (reassemble(full_decomposition(c.rep)) != c.rep) {
        ++bad;
        witness = rows_of(c.rep);
      }
    }
    res.checks.push_back({tag(n) + " full decompositions reassemble", bad == 0, witness});
    for (const auto& r : verify_distance_corollaries(classes)) {
      res.checks.push_back({tag(n) + " d=" + std::to_string(r.distance) + " " + r.shape, r.pass,
                            r.pass ? "" : rows_of(classes[r.index].rep)});
    }
  }
}

}  // namespace

bool SuiteResult::pass() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.pass; }));
}

std::vector<CodeClass> all_classes(std::size_t n, Exec exec) {
  if (n == 0) return {};
  if (n % 2 == 1) return classify_odd_length(cached_selfdual_reps(n + 1, exec), exec);
  const SelfDualSet sd = cached_selfdual_reps(n, exec);
  std::vector<CodeClass> out = classify_odd_lagrangians(sd, exec);
  for (auto& c : selfdual_classes(sd)) out.push_back(std::move(c));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"mass", "macwilliams", "theorems", "semiinvariants", "decompose"};
  return names;
}

SuiteResult run_suite(const std::string& suite, std::size_t n_lo, std::size_t n_hi, Exec exec) {
  SuiteResult res;
  res.suite = suite;
  if (suite == "mass") {
    suite_mass(res, std::max<std::size_t>(n_lo, 1), n_hi, exec);
  } else if (suite == "macwilliams") {
    suite_macwilliams(res, n_lo, n_hi, exec);
  } else if (suite == "theorems") {
    suite_theorems(res, std::max<std::size_t>(n_lo, 1), n_hi, exec);
  } else if (suite == "semiinvariants") {
    suite_semiinvariants(res);
  } else if (suite == "decompose") {
    suite_decompose(res, std::max<std::size_t>(n_lo, 1), n_hi, exec);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return res;
}

}  // namespace isocodes
