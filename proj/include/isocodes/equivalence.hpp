#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "isocodes/bigint.hpp"
#include "isocodes/code.hpp"
#include "isocodes/gf2.hpp"

namespace isocodes {

/// Result of canonical labeling.
///
/// canon is rref(permute(C, perm)); two codes are equivalent iff their canon
/// matrices are equal. aut_gens generate Aut(C).
struct CanonicalCert {
  BitMatrix canon;
  Permutation perm;
  Integer aut_order;
  std::vector<Permutation> aut_gens;
};

/// Limits for the refinement search.
struct CanonOptions {
  // Words beyond the spanning weight classes are only added while the
  // incidence structure stays under this many codewords.
  std::size_t word_budget = 512;
  // Hard stop on visited search nodes.
  std::size_t node_cap = 5'000'000;
};

inline constexpr std::size_t kCanonMaxLength = 64;
inline constexpr std::size_t kBruteForceMaxLength = 8;

/// Throws CapExceeded when n > kCanonMaxLength, k > kEnumerationCap or the node cap is hit.
CanonicalCert canonical_form(const LinearCode& c, const CanonOptions& opt = {});
bool are_equivalent(const LinearCode& a, const LinearCode& b);
Integer aut_order(const LinearCode& c);

/// Exhaustive S_n searches for n <= kBruteForceMaxLength.
bool brute_force_equivalent(const LinearCode& a, const LinearCode& b);
Integer brute_force_aut_order(const LinearCode& c);

/// True iff perm maps c onto itself.
bool is_automorphism(const LinearCode& c, std::span<const std::uint32_t> perm);

/// Batch kernels. Results are positionally aligned with the input and do not
/// depend on the thread count.
std::vector<CanonicalCert> canonical_forms_serial(std::span<const LinearCode> codes);
/// jobs == 0 means the OpenMP default.
std::vector<CanonicalCert> canonical_forms_parallel(std::span<const LinearCode> codes, int jobs = 0);

}  // namespace isocodes
