#include "isocodes/theorems.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "isocodes/weight_enum.hpp"

namespace isocodes {

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly mono(int c, unsigned i, unsigned j) { return BiPoly::monomial(CycloRat(c), i, j); }

struct Parts {
  BiPoly e1, e2, e3, e4;  // W+, W-, and their swaps
};

Parts parts_of(const LinearCode& c) {
  const WeightEnumerator w = wenum(c);
  Parts p;
  p.e1 = BiPoly::from_enumerator(even_part(w));
  p.e2 = BiPoly::from_enumerator(odd_part(w));
  p.e3 = p.e1.swapped();
  p.e4 = p.e2.swapped();
  return p;
}

class Checker {
 public:
  Checker(std::string theorem, std::size_t n) {
    report_.theorem = std::move(theorem);
    report_.n = n;
  }
  void add(std::string name, bool ok) { report_.checks.push_back({std::move(name), ok}); }
  // f = sum g_i R_i with unique R_i
  void direct_sum(std::string name, const BiPoly& f, const std::vector<BiPoly>& gens, const BiPoly& s,
                  const BiPoly& t) {
    const auto d = static_cast<unsigned>(report_.n);
    const Membership m = module_membership(f, gens, s, t, d);
    add(std::move(name), m.member && m.unique && evaluate_membership(m, gens, s, t) == f);
  }
  TheoremReport done() { return std::move(report_); }

 private:
  TheoremReport report_;
};

// Residues mod 4 of the odd weights present in c.
std::set<std::size_t> odd_residues(const LinearCode& c) {
  std::set<std::size_t> out;
  const auto& a = c.weight_distribution();
  for (std::size_t i = 1; i < a.size(); i += 2) {
    if (a[i] != 0) out.insert(i % 4);
  }
  return out;
}

// How A and B act on (v1, v2, v3): g.v_i = sum_j m[i][j] v_j.
struct Law {
  std::array<std::array<CycloRat, 3>, 3> a, b;
};

bool transforms_by(const Law& law, const std::array<BiPoly, 3>& f) {
  const Matrix2 ga = group::A();
  const Matrix2 gb = group::B();
  for (std::size_t i = 0; i < 3; ++i) {
    BiPoly want_a, want_b;
    for (std::size_t j = 0; j < 3; ++j) {
      want_a += f[j] * law.a[i][j];
      want_b += f[j] * law.b[i][j];
    }
    if (act(ga, f[i]) != want_a || act(gb, f[i]) != want_b) return false;
  }
  return true;
}

// rows v1, v2, v3; generators columns
using Table = std::array<std::array<BiPoly, 3>, 3>;

void check_table(Checker& ck, const Law& law, const Table& g, const std::array<BiPoly, 3>& v, const BiPoly& s,
                 const BiPoly& t) {
  for (std::size_t j = 0; j < 3; ++j) {
    ck.add("generator column " + std::to_string(j + 1) + " transforms like v",
           transforms_by(law, {g[0][j], g[1][j], g[2][j]}));
  }
  ck.add("v transforms like v", transforms_by(law, v));
  for (std::size_t i = 0; i < 3; ++i) {
    ck.direct_sum("v" + std::to_string(i + 1) + " in G" + std::to_string(i + 1), v[i], {g[i][0], g[i][1], g[i][2]}, s, t);
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

bool TheoremReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

std::string TheoremReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.pass) continue;
    if (!out.empty()) out += ", ";
    out += c.name;
  }
  return out;
}

TheoremReport check_thm_odd_general(const LinearCode& c) {
  const std::size_t n = c.length();
  require(n % 2 == 1 && is_max_totally_isotropic(c), "odd-length maximal totally isotropic code expected");
  Checker ck("odd-general", n);
  const Parts p = parts_of(c);
  const BiPoly s = poly::s_d8();
  const BiPoly t = poly::t_d8();
  ck.direct_sum("W+ in y R + a R", p.e1, {Y, poly::a()}, s, t);
  ck.direct_sum("W- in x R + b R", p.e2, {X, poly::b()}, s, t);
  ck.add("W+(x,y) = W-(y,x)", p.e1 == p.e4);
  const std::size_t m = (n - 1) / 2;
  const WeightEnumerator w = wenum(c);
  ck.add("W = MacWilliams of W+", macwilliams(even_part(w), m) == w);
  const Matrix2 a = group::A();
  const CycloRat h = CycloRat::sqrt2() * CycloRat(Rational(1, 2));
  ck.add("A.W+ = (W+ + W-)/sqrt2", act(a, p.e1) == (p.e1 + p.e2) * h);
  ck.add("A.W- = (W- - W+)/sqrt2", act(a, p.e2) == (p.e2 - p.e1) * h);
  return ck.done();
}

TheoremReport check_thm_odd_typeII(const LinearCode& c) {
  const std::size_t n = c.length();
  require(n % 2 == 1 && is_max_totally_isotropic(c) && type_of(c) == CodeType::TypeII,
          "odd-length Type II code expected");
  Checker ck("odd-typeII", n);
  const bool plus = n % 8 == 1;
  ck.add("n = +-1 mod 8", plus || n % 8 == 7);
  const BiPoly e1 = parts_of(c).e1;
  if (plus) {
    ck.direct_sum("W+ in y R + u1 R", e1, {Y, poly::u1()}, poly::s_g(), poly::t_g());
  } else if (n % 8 == 7) {
    ck.direct_sum("W+ in a R + u2 R", e1, {poly::a(), poly::u2()}, poly::s_g(), poly::t_g());
  }
  return ck.done();
}

TheoremReport check_thm_even_general(const LinearCode& c) {
  const std::size_t n = c.length();
  require(is_odd_lagrangian(c), "odd Lagrangian expected");
  Checker ck("even-general", n);
  const Parts p = parts_of(c);
  const BiPoly s = poly::s_d8();
  const BiPoly t = poly::t_d8();
  ck.direct_sum("e1+e3 in R", p.e1 + p.e3, {1}, s, t);
  ck.direct_sum("e2-e4 in D R", p.e2 - p.e4, {poly::D()}, s, t);
  const BiPoly p1 = mono(2, 1, 1);
  const BiPoly q1 = mono(1, 1, 5) - mono(2, 3, 3) + mono(1, 5, 1);
  const BiPoly p2 = Y * Y - X * X;
  const BiPoly q2 = mono(2, 2, 2) * (Y * Y - X * X);
  ck.direct_sum("e2+e4 in p1 R + q1 R", p.e2 + p.e4, {p1, q1}, s, t);
  ck.direct_sum("e1-e3 in p2 R + q2 R", p.e1 - p.e3, {p2, q2}, s, t);

  const Matrix2 a = group::A();
  const CycloRat half(Rational(1, 2));
  ck.add("A.e1 = (e1+e2+e3+e4)/2", act(a, p.e1) == (p.e1 + p.e2 + p.e3 + p.e4) * half);
  ck.add("A.e2 = (-e1+e2+e3-e4)/2", act(a, p.e2) == (p.e2 + p.e3 - p.e1 - p.e4) * half);
  const BiPoly v1 = p.e2 + p.e4;
  const BiPoly v2 = p.e1 - p.e3;
  ck.add("A.(e2+e4) = -(e1-e3)", act(a, v1) == -v2);
  ck.add("A.(e1-e3) = e2+e4", act(a, v2) == v1);
  ck.add("e2-e4 semi-invariant (A:1, X:-1)", is_semi_invariant(p.e2 - p.e4, {a, group::X()}, {1, -1}));
  const LinearCode parent = extend(even_subcode(c), BitVec::ones(n));
  ck.add("e1+e3 = W(L+ + 1)", BiPoly::from_enumerator(wenum(parent)) == p.e1 + p.e3);
  return ck.done();
}

TheoremReport check_thm_even_typeII(const LinearCode& c, GeneratorTable table) {
  const std::size_t n = c.length();
  require(is_odd_lagrangian(c) && type_of(c) == CodeType::TypeII, "odd Lagrangian of Type II expected");
  Checker ck("even-typeII", n);
  const std::set<std::size_t> res = odd_residues(c);
  ck.add("odd weights share one residue mod 4", res.size() == 1);
  if (res.size() != 1) return ck.done();
  const bool res1 = *res.begin() == 1;
  const Parts e = parts_of(c);
  const BiPoly sg = poly::s_g();
  const BiPoly tg = poly::t_g();
  const BiPoly w = poly::w();
  const CycloRat i = CycloRat::i();
  // B multiplies odd-weight terms by -i or i depending on the residue
  const CycloRat beta = res1 ? -i : i;

  if (n % 4 == 0) {
    ck.add("n = 0 mod 8", n % 8 == 0);
    const BiPoly P1 = mono(2, 1, 1);
    const BiPoly P2 = Y * Y - X * X;
    const BiPoly P3 = res1 ? Y * Y + X * X : -(Y * Y + X * X);
    const BiPoly Q1 = P2 * P3, Q2 = -(P1 * P3), Q3 = P1 * P2;
    const BiPoly R1 = P1.pow(3), R2 = P2.pow(3), R3 = -P3.pow(3);
    const BiPoly pp = mono(2, 1, 1) * (Y.pow(4) - X.pow(4));
    ck.direct_sum("v0 in R", e.e1 + e.e3, {1}, sg, tg);
    const Table g{{
        {pp * (Q1 * R3 + Q3 * R1), P1 * R3 - P3 * R1, -(pp * w * (P1 * Q3 + P3 * Q1))},
        // printed with P2 Q1; only P2 Q3 gives a covariant (degree 22, so no effect below n = 22)
        {pp * (Q3 * R2 - Q2 * R3), P2 * R3 - P3 * R2, pp * w * (P3 * Q2 - P2 * (table == GeneratorTable::Corrected ? Q3 : Q1))},
        {-(pp * (Q2 * R1 + Q1 * R2)), P2 * R1 - P1 * R2, pp * w * (P2 * Q1 + P1 * Q2)},
    }};
    // v1 = e2+e4, v2 = e1-e3, v3 = e2-e4
    const Law law{{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}, {{{0, 0, beta}, {0, 1, 0}, {beta, 0, 0}}}};
    check_table(ck, law, g, {e.e2 + e.e4, e.e1 - e.e3, e.e2 - e.e4}, sg, tg);
    return ck.done();
  }

  const BiPoly u1 = mono(2, 1, 1), u2 = Y * Y - X * X, u3 = Y * Y + X * X;
  const BiPoly pp = u1 * u2 * u3;
  const BiPoly r1 = mono(1, 1, 7) + mono(7, 5, 3) + mono(1, 7, 1) + mono(7, 3, 5);
  const BiPoly r2 = Y.pow(8) - X.pow(8);
  const BiPoly r3 = mono(1, 1, 7) + mono(7, 5, 3) - mono(1, 7, 1) - mono(7, 3, 5);
  const BiPoly u = poly::u();
  // v1 = e2+e4, v2 = e1-e3, v3 = e1+e3
  const std::array<BiPoly, 3> v{e.e2 + e.e4, e.e1 - e.e3, e.e1 + e.e3};
  const Law law{{{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}, {{{beta, 0, 0}, {0, 0, 1}, {0, 1, 0}}}};
  if (res1) {
    ck.add("n = 2 mod 8", n % 8 == 2);
    const BiPoly p1 = -(u2 * u3), p2 = u1 * u3, p3 = u1 * u2;
    const BiPoly q1 = mono(4, 1, 1) * (Y.pow(4) + X.pow(4));
    const BiPoly q2 = Y.pow(6) + mono(5, 2, 4) - mono(5, 4, 2) - X.pow(6);
    BiPoly q3 = Y.pow(6) - mono(5, 2, 4) - mono(5, 4, 2) + X.pow(6);
    if (table == GeneratorTable::Corrected) q3 = -q3;
    ck.direct_sum("v0 in pp u R", e.e2 - e.e4, {pp * u}, sg, tg);
    const Table g{{
        {u1, pp * (p3 * r1 - p2 * r3), p2 * q3 - p3 * q2},
        {u2, pp * (p3 * r2 - p1 * r3), p1 * q3 - p3 * q1},
        {u3, pp * (p1 * r1 - p2 * r2), p2 * q1 - p1 * q2},
    }};
    check_table(ck, law, g, v, sg, tg);
  } else {
    ck.add("n = 6 mod 8", n % 8 == 6);
    const BiPoly p1 = u2 * u3, p2 = -(u1 * u3), p3 = u1 * u2;
    const BiPoly q1 = u1.pow(3), q2 = u2.pow(3), q3 = -u3.pow(3);
    ck.direct_sum("v0 in pp u w R", e.e2 - e.e4, {pp * u * w}, sg, tg);
    const Table g{{
        {q2 * r3 + q3 * r1, q1, u * (p2 * q3 - p3 * q2)},
        {q3 * r2 - q1 * r3, q2, u * (p1 * q3 + p3 * q1)},
        // printed as q3; as a covariant the middle column needs u3^3. Row modules are unchanged.
        {-(q1 * r1 + q2 * r2), table == GeneratorTable::Corrected ? -q3 : q3, -(u * (p1 * q2 + p2 * q1))},
    }};
    check_table(ck, law, g, v, sg, tg);
  }
  return ck.done();
}

TheoremReport check_thm_selfdual(const LinearCode& c) {
  require(is_self_dual(c), "self-dual code expected");
  const std::size_t n = c.length();
  Checker ck("selfdual", n);
  const BiPoly w = BiPoly::from_enumerator(wenum(c));
  ck.direct_sum("W in C[s, t] (order 16)", w, {1}, poly::s_d8(), poly::t_d8());
  if (type_of(c) == CodeType::TypeII) {
    ck.add("n = 0 mod 8", n % 8 == 0);
    ck.direct_sum("W in C[s, t] (order 192)", w, {1}, poly::s_g(), poly::t_g());
  }
  return ck.done();
}

std::vector<TheoremReport> applicable_theorems(const LinearCode& c) {
  std::vector<TheoremReport> out;
  const bool two = type_of(c) == CodeType::TypeII;
  if (c.length() % 2 == 1) {
    if (!is_max_totally_isotropic(c)) return out;
    out.push_back(check_thm_odd_general(c));
    if (two) out.push_back(check_thm_odd_typeII(c));
  } else if (is_odd_lagrangian(c)) {
    out.push_back(check_thm_even_general(c));
    if (two) out.push_back(check_thm_even_typeII(c));
  } else if (is_self_dual(c)) {
    out.push_back(check_thm_selfdual(c));
  }
  return out;
}

}  // namespace isocodes
