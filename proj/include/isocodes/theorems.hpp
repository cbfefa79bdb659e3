#pragma once

#include <string>
#include <vector>

#include "isocodes/code.hpp"
#include "isocodes/invariants.hpp"

namespace isocodes {

/// Outcome of checking one structure theorem on one code. Every module
/// membership check also demands uniqueness of the decomposition.
struct TheoremReport {
  std::string theorem;
  std::size_t n = 0;
  std::vector<NamedCheck> checks;
  bool pass() const;
  /// Names of the failed checks, comma separated.
  std::string failures() const;
};

/// Odd length, maximal totally isotropic: W+ and W- over the dihedral ring.
TheoremReport check_thm_odd_general(const LinearCode& c);
/// Odd length, Type II: n = +-1 mod 8 and W+ over the order-192 ring.
TheoremReport check_thm_odd_typeII(const LinearCode& c);
/// Odd Lagrangian: the four combinations of e1..e4 over the dihedral ring.
TheoremReport check_thm_even_general(const LinearCode& c);
/// Which generator tables the Type II even-length check uses. The printed
/// tables have three slips, each caught by requiring every generator column
/// to transform like (v1, v2, v3):
///  - n = 2 mod 8: q3 must be negated, otherwise v1 can leave its module
///    (it does for one class at n = 10);
///  - n = 6 mod 8: the middle column's last entry is +u3^3 (row modules unchanged);
///  - n = 0 mod 8: the second row's last generator uses P2 Q3, not P2 Q1
///    (degree 22, invisible below n = 22).
enum class GeneratorTable { Corrected, AsPrinted };

/// Odd Lagrangian of Type II, split on n mod 4 and the odd-weight residue.
/// Besides membership, checks that each generator column transforms under
/// A and B exactly as (v1, v2, v3) does.
TheoremReport check_thm_even_typeII(const LinearCode& c, GeneratorTable table = GeneratorTable::Corrected);
/// Self-dual: W in C[s, t] of the dihedral ring, and of the order-192 ring for Type II.
TheoremReport check_thm_selfdual(const LinearCode& c);

/// Every theorem whose hypotheses the code meets.
std::vector<TheoremReport> applicable_theorems(const LinearCode& c);

}  // namespace isocodes
