#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isocodes/classify.hpp"
#include "isocodes/selfdual.hpp"

namespace isocodes {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // filled on failure
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool pass() const;
  std::size_t failures() const;
};

/// Every maximal totally isotropic class of length n: odd Lagrangians and
/// self-dual codes for even n, the odd-length classes for odd n.
std::vector<CodeClass> all_classes(std::size_t n, Exec exec = {});

/// Suites: mass, macwilliams, theorems, semiinvariants, decompose.
/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& suite, std::size_t n_lo, std::size_t n_hi, Exec exec = {});
const std::vector<std::string>& suite_names();

}  // namespace isocodes
