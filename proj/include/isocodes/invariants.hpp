#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isocodes/bipoly.hpp"
#include "isocodes/cyclo.hpp"

namespace isocodes {

/// The matrices generating the dihedral group of order 16 (A, X) and the
/// group of order 192 (A, B).
namespace group {
Matrix2 A();  // (1/sqrt2) [[1, 1], [-1, 1]]
Matrix2 X();  // diag(-1, 1)
Matrix2 B();  // diag(i, 1)
}  // namespace group

/// Named polynomials. Each function builds a fresh value.
namespace poly {
BiPoly s_d8();  // x^2 + y^2
BiPoly t_d8();  // x^2 y^2 (x^2 - y^2)^2
BiPoly a();     // enumerator of e7
BiPoly b();     // a(y, x)
BiPoly D();     // y b - x a
BiPoly s_g();   // enumerator of e8
BiPoly t_g();   // x^4 y^4 (x^4 - y^4)^4
BiPoly p();     // 2xy (y^2 - x^2)(y^2 + x^2)
BiPoly w();     // x^2 y^2 (x^4 - y^4)^2
BiPoly u();     // -(x^12 - 33 x^8 y^4 - 33 x^4 y^8 + y^12) / 2
BiPoly u1();    // odd Type II generator, degree 17
BiPoly u2();    // odd Type II generator, degree 23
}  // namespace poly

/// A one-dimensional character given by its values on two generators.
struct Character {
  std::string name;
  CycloRat on_first;
  CycloRat on_second;
};

bool is_invariant(const BiPoly& f, const std::vector<Matrix2>& gens);
/// g.f == chi(g) f for each generator; values aligned with gens.
bool is_semi_invariant(const BiPoly& f, const std::vector<Matrix2>& gens, const std::vector<CycloRat>& values);

struct MembershipTerm {
  std::size_t generator = 0;
  unsigned s_power = 0;
  unsigned t_power = 0;
  CycloRat coeff;
};

struct Membership {
  bool member = false;
  /// Solution is the only one (rank equals the number of unknowns).
  bool unique = false;
  std::vector<MembershipTerm> terms;  // nonzero coefficients of one solution
};

/// Solves f = sum_i g_i * sum c s^a t^b over the monomials of f's degree.
/// For f = 0 pass the degree explicitly so freeness can still be checked.
Membership module_membership(const BiPoly& f, const std::vector<BiPoly>& generators, const BiPoly& s,
                             const BiPoly& t, std::optional<unsigned> degree = std::nullopt);

/// Rebuilds sum_i g_i * sum c s^a t^b from a membership solution.
BiPoly evaluate_membership(const Membership& m, const std::vector<BiPoly>& generators, const BiPoly& s,
                           const BiPoly& t);

struct NamedCheck {
  std::string name;
  bool pass = false;
};

/// The group-theoretic facts everything else rests on: group orders, ring
/// invariants, the semi-invariant table, the polynomial identities, and the
/// scaled form of the A action.
std::vector<NamedCheck> verify_semi_invariant_identities();

/// f(x - y, x + y) by integer binomial expansion; coefficients of f must be rational.
BiPoly rotate_substitute(const BiPoly& f);

}  // namespace isocodes
