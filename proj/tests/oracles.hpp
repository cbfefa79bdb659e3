#pragma once

// Slow, independent reference computations for tests. Everything here works
// from membership tests over all of F2^n, never from generator tricks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "isocodes/code.hpp"
#include "isocodes/gf2.hpp"

namespace oracle {

using isocodes::BitMatrix;
using isocodes::BitVec;
using isocodes::LinearCode;
using isocodes::Word;

inline std::vector<BitVec> all_vectors(std::size_t n) {
  std::vector<BitVec> out;
  for (Word a = 0; a < (Word{1} << n); ++a) out.push_back(BitVec::from_word(n, a));
  return out;
}

inline std::vector<BitVec> members(const LinearCode& c) {
  std::vector<BitVec> out;
  for (const auto& v : all_vectors(c.length())) {
    if (c.contains(v)) out.push_back(v);
  }
  return out;
}

inline std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
  std::vector<std::uint64_t> a(c.length() + 1, 0);
  for (const auto& v : members(c)) ++a[v.weight()];
  return a;
}

template <typename Form>
LinearCode perp(const LinearCode& c, Form form) {
  std::vector<BitVec> rows;
  for (const auto& v : all_vectors(c.length())) {
    bool ok = true;
    for (const auto& g : c.generators().rows()) ok = ok && !form(v, g);
    if (ok) rows.push_back(v);
  }
  return LinearCode(c.length(), rows);
}

inline LinearCode perp_alt(const LinearCode& c) { return perp(c, isocodes::alt_inner); }
inline LinearCode dual_dot(const LinearCode& c) { return perp(c, isocodes::dot); }

inline BitVec random_vec(std::mt19937_64& rng, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) v.set(i);
  }
  return v;
}

/// Row space of k random vectors, so the dimension may come out below k.
inline LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(random_vec(rng, n));
  return LinearCode(n, rows);
}

inline isocodes::Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  isocodes::Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Every subspace of F2^n, each once, via all reduced echelon matrices.
inline std::vector<LinearCode> all_subspaces(std::size_t n) {
  std::vector<LinearCode> out;
  for (Word pivmask = 0; pivmask < (Word{1} << n); ++pivmask) {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < n; ++i) {
      if ((pivmask >> i) & 1U) piv.push_back(i);
    }
    // free slots: for row r, columns after piv[r] that are not pivots
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      for (std::size_t c = piv[r] + 1; c < n; ++c) {
        if (!((pivmask >> c) & 1U)) slots.emplace_back(r, c);
      }
    }
    for (Word fill = 0; fill < (Word{1} << slots.size()); ++fill) {
      std::vector<BitVec> rows;
      for (std::size_t p : piv) rows.push_back(BitVec::unit(n, p));
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((fill >> s) & 1U) rows[slots[s].first].set(slots[s].second);
      }
      out.emplace_back(n, rows);
    }
  }
  return out;
}

}  // namespace oracle
