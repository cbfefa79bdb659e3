#include "isocodes/weight_enum.hpp"

#include <sstream>
#include <stdexcept>

namespace isocodes {

namespace {

// Coefficients of (y + sign*x)^e by ascending power of x.
std::vector<Integer> binomial_row(std::size_t e, int sign) {
  std::vector<Integer> row(e + 1);
  for (std::size_t a = 0; a <= e; ++a) {
    row[a] = binomial(static_cast<unsigned>(e), static_cast<unsigned>(a));
    if (sign < 0 && (a & 1U)) row[a] = -row[a];
  }
  return row;
}

// Adds A * (y + s1 x)^i (y + s2 x)^(n-i) into out.
void add_term(std::vector<Integer>& out, const Integer& coeff, std::size_t i, std::size_t n, int s1, int s2) {
  if (coeff == 0) return;
  const auto left = binomial_row(i, s1);
  const auto right = binomial_row(n - i, s2);
  for (std::size_t a = 0; a < left.size(); ++a) {
    for (std::size_t b = 0; b < right.size(); ++b) out[a + b] += coeff * left[a] * right[b];
  }
}

WeightEnumerator divide_exact(std::vector<Integer> acc, std::size_t k) {
  const Integer d = pow2(static_cast<unsigned>(k));
  for (auto& c : acc) {
    if (c % d != 0) throw NonIntegralTransform("transform is not integral; dimension does not match enumerator");
    c /= d;
  }
  return WeightEnumerator(std::move(acc));
}

}  // namespace

WeightEnumerator::WeightEnumerator(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

WeightEnumerator WeightEnumerator::from_distribution(const std::vector<std::uint64_t>& a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (auto v : a) c.emplace_back(v);
  return WeightEnumerator(std::move(c));
}

WeightEnumerator WeightEnumerator::swapped() const {
  return WeightEnumerator(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

WeightEnumerator operator+(const WeightEnumerator& a, const WeightEnumerator& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) throw std::invalid_argument("enumerator degree mismatch");
  WeightEnumerator out = a;
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

std::string WeightEnumerator::to_string() const {
  const std::size_t n = degree();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Integer c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool bare = i == 0 && i == n;
    if (c != 1 || bare) os << c;
    if (i > 0) os << 'x' << (i > 1 ? "^" + std::to_string(i) : "");
    if (n - i > 0) os << 'y' << (n - i > 1 ? "^" + std::to_string(n - i) : "");
  }
  return first ? "0" : os.str();
}

std::string WeightEnumerator::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  return os.str();
}

WeightEnumerator wenum(const LinearCode& c) { return WeightEnumerator::from_distribution(c.weight_distribution()); }

WeightEnumerator even_part(const WeightEnumerator& w) {
  WeightEnumerator out = w;
  for (std::size_t i = 1; i <= w.degree(); i += 2) out[i] = 0;
  return out;
}

WeightEnumerator odd_part(const WeightEnumerator& w) {
  WeightEnumerator out = w;
  for (std::size_t i = 0; i <= w.degree(); i += 2) out[i] = 0;
  return out;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t k) {
  const std::size_t n = w.degree();
  std::vector<Integer> acc(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) add_term(acc, w[i], i, n, -1, +1);
  return divide_exact(std::move(acc), k);
}

WeightEnumerator macwilliams_type(const WeightEnumerator& w, std::size_t k) {
  const std::size_t n = w.degree();
  std::vector<Integer> acc(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i % 2 == 0) {
      add_term(acc, w[i], i, n, -1, +1);  // W+(y-x, y+x)
    } else {
      add_term(acc, w[i], i, n, +1, -1);  // W-(y+x, y-x)
    }
  }
  return divide_exact(std::move(acc), k);
}

Integer krawtchouk(std::size_t k, std::size_t i, std::size_t n) {
  if (k > n || i > n) throw std::out_of_range("krawtchouk: index out of range");
  Integer s = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    if (j > i || k - j > n - i) continue;
    Integer term = binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) *
                   binomial(static_cast<unsigned>(n - i), static_cast<unsigned>(k - j));
    s += (j & 1U) ? -term : term;
  }
  return s;
}

std::vector<Integer> perp_weights_via_krawtchouk(const std::vector<Integer>& a, std::size_t n, std::size_t k) {
  if (a.size() != n + 1) throw std::invalid_argument("distribution length must be n + 1");
  const Integer d = pow2(static_cast<unsigned>(k));
  std::vector<Integer> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    Integer s = 0;
    const std::size_t kk = j % 2 == 0 ? j : n - j;
    for (std::size_t i = 0; i <= n; ++i) s += a[i] * krawtchouk(kk, i, n);
    if (s % d != 0) throw NonIntegralTransform("Krawtchouk sum is not divisible by 2^k");
    out[j] = s / d;
  }
  return out;
}

}  // namespace isocodes
