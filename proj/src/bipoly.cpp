#include "isocodes/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "isocodes/weight_enum.hpp"

namespace isocodes {

BiPoly::BiPoly(const CycloRat& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

BiPoly BiPoly::monomial(const CycloRat& c, unsigned i, unsigned j) {
  BiPoly p;
  p.add({i, j}, c);
  return p;
}

BiPoly BiPoly::from_enumerator(const WeightEnumerator& w) {
  BiPoly p;
  const auto n = static_cast<unsigned>(w.degree());
  for (unsigned i = 0; i <= n; ++i) p.add({i, n - i}, CycloRat(w[i]));
  return p;
}

void BiPoly::add(const Key& k, const CycloRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycloRat BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? CycloRat() : it->second;
}

bool BiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.first + terms_.begin()->first.second;
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.first + t.first.second == d; });
}

unsigned BiPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  if (!is_homogeneous()) throw std::domain_error("polynomial is not homogeneous");
  return terms_.begin()->first.first + terms_.begin()->first.second;
}

BiPoly BiPoly::substitute(const CycloRat& a, const CycloRat& b, const CycloRat& c, const CycloRat& d) const {
  unsigned maxi = 0;
  unsigned maxj = 0;
  for (const auto& [k, v] : terms_) {
    maxi = std::max(maxi, k.first);
    maxj = std::max(maxj, k.second);
  }
  const BiPoly lx = monomial(a, 1, 0) + monomial(b, 0, 1);
  const BiPoly ly = monomial(c, 1, 0) + monomial(d, 0, 1);
  std::vector<BiPoly> px{BiPoly(1)};
  std::vector<BiPoly> py{BiPoly(1)};
  for (unsigned e = 1; e <= maxi; ++e) px.push_back(px.back() * lx);
  for (unsigned e = 1; e <= maxj; ++e) py.push_back(py.back() * ly);
  BiPoly out;
  for (const auto& [k, v] : terms_) out += px[k.first] * py[k.second] * v;
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(Key{k.second, k.first}, v);
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly out(1);
  BiPoly base = *this;
  while (e) {
    if (e & 1U) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, v] : o.terms_) add(k, -v);
  return *this;
}

BiPoly& BiPoly::operator*=(const CycloRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) out.add({ka.first + kb.first, ka.second + kb.second}, va * vb);
  }
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.to_string() << ")";
    if (k.first) os << "*x^" << k.first;
    if (k.second) os << "*y^" << k.second;
  }
  return os.str();
}

Matrix2 Matrix2::inverse() const {
  const CycloRat dt = det();
  if (dt.is_zero()) throw std::domain_error("singular matrix");
  const CycloRat inv = dt.inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

Matrix2 operator*(const Matrix2& p, const Matrix2& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
}

BiPoly act(const Matrix2& g, const BiPoly& f) {
  const Matrix2 h = g.inverse();
  return f.substitute(h.a, h.b, h.c, h.d);
}

std::vector<Matrix2> group_closure(const std::vector<Matrix2>& gens, std::size_t limit) {
  std::vector<Matrix2> elems{Matrix2::identity()};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Matrix2 m = elems[head] * g;
      if (std::find(elems.begin(), elems.end(), m) == elems.end()) {
        if (elems.size() >= limit) throw std::length_error("group closure exceeded limit");
        elems.push_back(std::move(m));
      }
    }
  }
  return elems;
}

}  // namespace isocodes
