#include "isocodes/cyclo.hpp"

#include <stdexcept>

namespace isocodes {

CycloRat CycloRat::zeta(int k) {
  k %= 8;
  if (k < 0) k += 8;
  CycloRat z;
  if (k < 4) {
    z.c_[static_cast<std::size_t>(k)] = 1;
  } else {
    z.c_[static_cast<std::size_t>(k - 4)] = -1;
  }
  return z;
}

bool CycloRat::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

CycloRat CycloRat::galois(int k) const {
  if (k % 2 == 0) throw std::invalid_argument("galois: exponent must be odd");
  CycloRat out;
  for (int j = 0; j < 4; ++j) {
    if (c_[static_cast<std::size_t>(j)] != 0) out += CycloRat(c_[static_cast<std::size_t>(j)]) * zeta(j * k);
  }
  return out;
}

CycloRat CycloRat::inverse() const {
  if (is_zero()) throw std::domain_error("CycloRat: division by zero");
  // the product of all conjugates is the (rational) norm
  const CycloRat rest = galois(3) * galois(5) * galois(7);
  const CycloRat norm = *this * rest;
  if (!norm.is_rational()) throw std::logic_error("CycloRat: norm is not rational");
  return rest * CycloRat(1 / norm.c_[0]);
}

CycloRat& CycloRat::operator+=(const CycloRat& o) {
  for (std::size_t j = 0; j < 4; ++j) c_[j] += o.c_[j];
  return *this;
}

CycloRat& CycloRat::operator-=(const CycloRat& o) {
  for (std::size_t j = 0; j < 4; ++j) c_[j] -= o.c_[j];
  return *this;
}

CycloRat& CycloRat::operator*=(const CycloRat& o) {
  std::array<Rational, 4> r{};
  for (std::size_t a = 0; a < 4; ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; b < 4; ++b) {
      if (o.c_[b] == 0) continue;
      const Rational p = c_[a] * o.c_[b];
      if (a + b < 4) {
        r[a + b] += p;
      } else {
        r[a + b - 4] -= p;
      }
    }
  }
  c_ = std::move(r);
  return *this;
}

std::string CycloRat::to_string() const {
  if (is_rational()) return to_fraction_string(c_[0]);
  std::string s = "[";
  for (std::size_t j = 0; j < 4; ++j) s += (j ? "," : "") + to_fraction_string(c_[j]);
  return s + "]";
}

}  // namespace isocodes
