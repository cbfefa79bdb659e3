#include "isocodes/invariants.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace isocodes {

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly mono(int c, unsigned i, unsigned j) { return BiPoly::monomial(CycloRat(c), i, j); }

CycloRat inv_sqrt2() { return CycloRat::sqrt2() * CycloRat(Rational(1, 2)); }

bool check_scaled_action(std::mt19937_64& rng) {
  const Matrix2 a = group::A();
  for (unsigned d = 0; d <= 12; ++d) {
    BiPoly f;
    BiPoly f_even;  // only even powers of x
    for (unsigned i = 0; i <= d; ++i) {
      const int c = static_cast<int>(rng() % 11) - 5;
      f += mono(c, i, d - i);
      if (i % 2 == 0) f_even += mono(c, i, d - i);
    }
    CycloRat scale = 1;
    for (unsigned k = 0; k < d; ++k) scale *= inv_sqrt2();
    if (act(a, f) != rotate_substitute(f) * scale) return false;
    // with no odd powers of x the sign of x - y does not matter
    const BiPoly alt = f_even.substitute(-1, 1, 1, 1);
    if (act(a, f_even) != alt * scale) return false;
  }
  return true;
}

}  // namespace

namespace group {
Matrix2 A() {
  const CycloRat h = inv_sqrt2();
  return {h, h, -h, h};
}
Matrix2 X() { return {-1, 0, 0, 1}; }
Matrix2 B() { return {CycloRat::i(), 0, 0, 1}; }
}  // namespace group

namespace poly {
BiPoly s_d8() { return X * X + Y * Y; }
BiPoly t_d8() { return X * X * Y * Y * (X * X - Y * Y).pow(2); }
BiPoly a() { return mono(1, 0, 7) + mono(7, 4, 3); }
BiPoly b() { return a().swapped(); }
BiPoly D() { return Y * b() - X * a(); }
BiPoly s_g() { return mono(1, 0, 8) + mono(14, 4, 4) + mono(1, 8, 0); }
BiPoly t_g() { return mono(1, 4, 4) * (X.pow(4) - Y.pow(4)).pow(4); }
BiPoly p() { return mono(2, 1, 1) * (Y * Y - X * X) * (Y * Y + X * X); }
BiPoly w() { return X * X * Y * Y * (X.pow(4) - Y.pow(4)).pow(2); }
BiPoly u() {
  return (mono(1, 12, 0) - mono(33, 8, 4) - mono(33, 4, 8) + mono(1, 0, 12)) * CycloRat(Rational(-1, 2));
}
BiPoly u1() { return mono(1, 0, 17) + mono(17, 4, 13) + mono(187, 8, 9) + mono(51, 12, 5); }
BiPoly u2() { return mono(1, 0, 23) + mono(506, 8, 15) + mono(1288, 12, 11) + mono(253, 16, 7); }
}  // namespace poly

bool is_invariant(const BiPoly& f, const std::vector<Matrix2>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Matrix2& g) { return act(g, f) == f; });
}

bool is_semi_invariant(const BiPoly& f, const std::vector<Matrix2>& gens, const std::vector<CycloRat>& values) {
  if (gens.size() != values.size()) throw std::invalid_argument("one character value per generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (act(gens[i], f) != f * values[i]) return false;
  }
  return true;
}

Membership module_membership(const BiPoly& f, const std::vector<BiPoly>& generators, const BiPoly& s,
                             const BiPoly& t, std::optional<unsigned> degree) {
  if (!f.is_homogeneous()) throw std::domain_error("module_membership: f is not homogeneous");
  if (f.is_zero() && !degree) {
    Membership m;
    m.member = true;
    m.unique = true;
    return m;
  }
  const unsigned d = degree ? *degree : f.degree();
  if (!f.is_zero() && f.degree() != d) throw std::domain_error("module_membership: degree hint disagrees with f");
  const unsigned ds = s.degree();
  const unsigned dt = t.degree();

  // unknowns: g_i s^a t^b landing in degree d
  struct Unknown {
    std::size_t gen;
    unsigned a, b;
    BiPoly value;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const BiPoly& g = generators[i];
    if (g.is_zero()) continue;
    const unsigned e = g.degree();
    if (e > d) continue;
    for (unsigned a = 0; e + a * ds <= d; ++a) {
      const unsigned rest = d - e - a * ds;
      if (rest % dt != 0) continue;
      const unsigned b = rest / dt;
      unknowns.push_back({i, a, b, g * s.pow(a) * t.pow(b)});
    }
  }

  // augmented system, one row per monomial x^i y^(d-i)
  const std::size_t cols = unknowns.size();
  std::vector<std::vector<CycloRat>> m(d + 1, std::vector<CycloRat>(cols + 1));
  for (unsigned i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = unknowns[j].value.coeff(i, d - i);
    m[i][cols] = f.coeff(i, d - i);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const CycloRat inv = m[row][col].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const CycloRat factor = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  Membership out;
  out.member = true;
  for (std::size_t r = row; r < m.size(); ++r) {
    if (!m[r][cols].is_zero()) out.member = false;
  }
  out.unique = pivot_col.size() == cols;
  if (!out.member) return out;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    if (m[r][cols].is_zero()) continue;
    const auto& u = unknowns[pivot_col[r]];
    out.terms.push_back({u.gen, u.a, u.b, m[r][cols]});
  }
  return out;
}

BiPoly evaluate_membership(const Membership& m, const std::vector<BiPoly>& generators, const BiPoly& s,
                           const BiPoly& t) {
  BiPoly out;
  for (const auto& term : m.terms) out += generators[term.generator] * s.pow(term.s_power) * t.pow(term.t_power) * term.coeff;
  return out;
}

BiPoly rotate_substitute(const BiPoly& f) {
  // (x - y)^i (x + y)^j, expanded with integer binomials
  BiPoly out;
  for (const auto& [k, c] : f.terms()) {
    if (!c.is_rational()) throw std::domain_error("rotate_substitute needs rational coefficients");
    const auto [i, j] = k;
    std::map<unsigned, Integer> acc;  // power of x -> coefficient
    for (unsigned a = 0; a <= i; ++a) {
      Integer left = binomial(i, a);
      if ((i - a) % 2 == 1) left = -left;  // x^a (-y)^(i-a)
      for (unsigned b = 0; b <= j; ++b) acc[a + b] += left * binomial(j, b);
    }
    const unsigned d = i + j;
    for (const auto& [px, v] : acc) out += BiPoly::monomial(CycloRat(Rational(v) * c[0]), px, d - px);
  }
  return out;
}

std::vector<NamedCheck> verify_semi_invariant_identities() {
  using namespace poly;
  std::vector<NamedCheck> out;
  auto check = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };
  const Matrix2 ga = group::A();
  const Matrix2 gx = group::X();
  const Matrix2 gb = group::B();
  const std::vector<Matrix2> d8{ga, gx};
  const std::vector<Matrix2> g{ga, gb};
  const CycloRat i = CycloRat::i();

  check("|<A,X>| = 16", group_closure(d8).size() == 16);
  check("|<A,B>| = 192", group_closure(g).size() == 192);

  check("s invariant under <A,X>", is_invariant(s_d8(), d8));
  check("t invariant under <A,X>", is_invariant(t_d8(), d8));
  check("D semi-invariant (A:1, X:-1)", is_semi_invariant(D(), d8, {1, -1}));
  check("s invariant under <A,B>", is_invariant(s_g(), g));
  check("t invariant under <A,B>", is_invariant(t_g(), g));

  check("D^2 = t(s^4 - 16t)", D().pow(2) == t_d8() * (s_d8().pow(4) - t_d8() * CycloRat(16)));
  check("w^2 = t", w().pow(2) == t_g());
  check("u^2 = (s^3 - 108t)/4", u().pow(2) == (s_g().pow(3) - t_g() * CycloRat(108)) * CycloRat(Rational(1, 4)));
  check("p^2 = 4w", p().pow(2) == w() * CycloRat(4));
  check("D1^2 w = t(s^3 - 108t)", (p() * u()).pow(2) * w() == t_g() * (s_g().pow(3) - t_g() * CycloRat(108)));

  struct Row {
    const char* name;
    BiPoly f;
    CycloRat on_a, on_b;
  };
  const std::vector<Row> table{
      {"p", p(), -1, -i},
      {"w", w(), 1, -1},
      {"u", u(), -1, 1},
      {"D1 = pu", p() * u(), 1, -i},
      {"D2 = puw", p() * u() * w(), 1, i},
      {"D3 = pw", p() * w(), -1, i},
      {"D4 = uw", u() * w(), -1, -1},
  };
  for (const auto& r : table) {
    check(std::string("semi-invariant ") + r.name + " (A:" + r.on_a.to_string() + ", B:" + r.on_b.to_string() + ")",
          is_semi_invariant(r.f, g, {r.on_a, r.on_b}));
  }

  std::mt19937_64 rng(8);
  check("A acts as 2^(-d/2) f(x - y, x + y)", check_scaled_action(rng));
  return out;
}

}  // namespace isocodes
