#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isocodes/classify.hpp"
#include "isocodes/code.hpp"
#include "isocodes/gf2.hpp"

namespace isocodes {

/// Span of all pointwise products uv with u, v in c.
LinearCode product_span(const LinearCode& c);

/// Smallest e (packed order) outside {0, 1} with <e, uv> = 0 for all u, v in
/// c; none iff c is indecomposable. c must be maximal totally isotropic.
std::optional<BitVec> find_splitting_vector(const LinearCode& c);

struct Split {
  LinearCode first;   // projection onto support(e)
  LinearCode second;  // projection onto the rest
  /// permute(c, perm) == direct_product(first, second)
  Permutation perm;
};

/// Throws InvariantViolation when the projections do not multiply back to c,
/// or when neither factor is all-even.
Split split(const LinearCode& c, const BitVec& e);

/// Connected components of the code's matroid, each as a sorted coordinate
/// list, ordered by smallest coordinate. These are exactly the blocks of the
/// finest direct-product decomposition of any linear code.
std::vector<std::vector<std::size_t>> matroid_components(const LinearCode& c);

struct Decomposition {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> blocks;  // partition of 0..n-1, sorted by first coordinate
  std::vector<LinearCode> factors;               // factors[i] = projection onto blocks[i]
};

/// Splits with splitting vectors while the piece is maximal totally
/// isotropic and by matroid components otherwise (e.g. the e7 in i1 x e7).
Decomposition full_decomposition(const LinearCode& c);
/// The code the decomposition describes, in the original coordinates.
LinearCode reassemble(const Decomposition& d);
/// "{0} i1 | {1..7} [7,3,4]": block, then a short factor label.
std::string describe(const Decomposition& d);

struct CorollaryCheck {
  std::size_t index = 0;  // position in the class list
  std::size_t distance = 0;
  bool pass = false;
  std::string shape;  // "i1 x M", "i2' x M", "i1 x M+", "i2^k x M" or why it failed
};

/// Every class with d = 1 or d = 2 against the splitting corollaries.
std::vector<CorollaryCheck> verify_distance_corollaries(const std::vector<CodeClass>& classes);

}  // namespace isocodes
