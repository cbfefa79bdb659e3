#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isocodes/bigint.hpp"
#include "isocodes/code.hpp"

namespace isocodes {

/// Exact comparison of a mass sum against its closed form.
struct MassCheck {
  Rational lhs;
  Rational rhs;
  bool pass() const { return lhs == rhs; }
  /// rhs - lhs; positive means classes are missing.
  Rational deficit() const { return rhs - lhs; }
};

/// Pairwise inequivalent self-dual codes of one length.
struct SelfDualSet {
  std::size_t n = 0;
  std::vector<LinearCode> reps;
  std::vector<Integer> aut_orders;
};

/// How batch work is spread: OpenMP with `jobs` threads, or the serial reference path.
struct Exec {
  bool parallel = true;
  int jobs = 0;
};

/// Number of self-dual codes of even length n.
Integer t_n(std::size_t n);

/// sum n!/|Aut| against t_n.
MassCheck selfdual_mass(const SelfDualSet& sd);

/// Reads '%'-separated records, checks self-duality and inequivalence and
/// certifies the mass. Throws ParseError or VerificationFailure.
SelfDualSet parse_selfdual_db(std::istream& in, Exec exec = {});

/// Neighbor-graph search from i2^(n/2), certified against t_n. n even, 2 <= n <= 16.
SelfDualSet generate_selfdual_reps(std::size_t n, Exec exec = {});

/// Reads $ISOCODES_CACHE_DIR/selfdual_<n>.txt when present, else generates
/// and writes it there. Without the variable this is plain generation.
SelfDualSet cached_selfdual_reps(std::size_t n, Exec exec = {});

/// A generator matrix of k whose rows add up to the all-ones word.
BitMatrix normalize_ones_first(const LinearCode& k);

void write_selfdual_set(std::ostream& out, const SelfDualSet& sd);

}  // namespace isocodes
