#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "isocodes/bigint.hpp"
#include "isocodes/code.hpp"
#include "isocodes/selfdual.hpp"

namespace isocodes {

/// One equivalence class of maximal totally isotropic codes.
struct CodeClass {
  LinearCode rep;  // the canonical representative
  Integer aut_order;
  CodeType type = CodeType::TypeI;
  std::size_t min_distance = 0;
  std::vector<std::uint64_t> weights;
  std::size_t parent = 0;  // index into the self-dual set it came from
};

struct TableRow {
  std::size_t n = 0;
  std::size_t count_typeI = 0;
  std::size_t count_typeII = 0;
  std::size_t d_max = 0;
  std::size_t count_max_typeI = 0;
  std::size_t count_max_typeII = 0;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Complements of <1> in a self-dual k, one per Aut(k)-orbit, in canonical order.
std::vector<LinearCode> complements_of_ones(const LinearCode& k, Exec exec = {});

/// The two odd Lagrangians with even part k0: (k0 + xi, k0 + xi + 1), xi the
/// smallest odd word orthogonal to k0.
std::pair<LinearCode, LinearCode> odd_pair_from_complement(const LinearCode& k0);

/// All classes of odd Lagrangians of length sd.n, sorted by canonical form.
std::vector<CodeClass> classify_odd_lagrangians(const SelfDualSet& sd, Exec exec = {});

/// Classes of maximal totally isotropic codes of odd length sd.n - 1, from
/// shortening the self-dual codes at every coordinate.
std::vector<CodeClass> classify_odd_length(const SelfDualSet& sd, Exec exec = {});

/// Class data for the self-dual representatives themselves.
std::vector<CodeClass> selfdual_classes(const SelfDualSet& sd);

/// sum 1/|Aut| against 2^(n/2) T_n / n!.
MassCheck verify_odd_mass(const std::vector<CodeClass>& classes, std::size_t n);
/// sum n!/|Aut| against T_(n+1) for odd n.
MassCheck verify_odd_length_mass(const std::vector<CodeClass>& classes, std::size_t n);

TableRow table_row(const std::vector<CodeClass>& classes, std::size_t n);

/// Groups (size >= 2) of class indices sharing a weight distribution.
std::vector<std::vector<std::size_t>> duplicate_weight_distributions(const std::vector<CodeClass>& classes);

}  // namespace isocodes
