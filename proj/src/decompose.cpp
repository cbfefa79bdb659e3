#include "isocodes/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "isocodes/errors.hpp"

namespace isocodes {

namespace {

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& s, std::size_t n) {
  std::vector<bool> in(n, false);
  for (auto i : s) in[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> lift(const std::vector<std::size_t>& local, const std::vector<std::size_t>& coords) {
  std::vector<std::size_t> out;
  for (auto i : local) out.push_back(coords[i]);
  return out;
}

// d(M) >= bound, reading the empty code's distance as infinite
bool distance_at_least(const LinearCode& m, std::size_t bound) {
  return m.dimension() == 0 || m.min_distance() >= bound;
}

struct Piece {
  std::vector<std::size_t> coords;
  LinearCode code;
};

void decompose_into(const LinearCode& c, const std::vector<std::size_t>& coords, std::vector<Piece>& out) {
  if (c.length() <= 1) {
    out.push_back({coords, c});
    return;
  }
  if (is_max_totally_isotropic(c)) {
    const auto e = find_splitting_vector(c);
    if (!e) {
      out.push_back({coords, c});
      return;
    }
    const auto s = e->support();
    const auto t = complement_of(s, c.length());
    const Split sp = split(c, *e);
    // smaller factor first
    if (s.size() <= t.size()) {
      decompose_into(sp.first, lift(s, coords), out);
      decompose_into(sp.second, lift(t, coords), out);
    } else {
      decompose_into(sp.second, lift(t, coords), out);
      decompose_into(sp.first, lift(s, coords), out);
    }
    return;
  }
  for (const auto& block : matroid_components(c)) out.push_back({lift(block, coords), project(c, block)});
}

}  // namespace

LinearCode product_span(const LinearCode& c) {
  const auto& b = c.generators().rows();
  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) rows.push_back(pointwise_product(b[i], b[j]));
  }
  return LinearCode(c.length(), rows);
}

std::optional<BitVec> find_splitting_vector(const LinearCode& c) {
  if (!is_max_totally_isotropic(c)) throw std::invalid_argument("find_splitting_vector: code is not maximal totally isotropic");
  const std::size_t n = c.length();
  const BitVec ones = BitVec::ones(n);
  std::optional<BitVec> best;
  for (const auto& e : perp_alt(product_span(c)).codewords()) {
    if (e.is_zero() || e == ones) continue;
    if (!best || e < *best) best = e;
  }
  return best;
}

Split split(const LinearCode& c, const BitVec& e) {
  const std::size_t n = c.length();
  const auto s = e.support();
  const auto t = complement_of(s, n);
  Split out{project(c, s), project(c, t), Permutation(n)};
  for (std::size_t k = 0; k < s.size(); ++k) out.perm[s[k]] = static_cast<std::uint32_t>(k);
  for (std::size_t k = 0; k < t.size(); ++k) out.perm[t[k]] = static_cast<std::uint32_t>(s.size() + k);
  if (permute(c, out.perm) != direct_product(out.first, out.second)) {
    throw InvariantViolation("split: projections do not multiply back to the code");
  }
  if (!out.first.is_even() && !out.second.is_even()) throw InvariantViolation("split: neither factor is even");
  return out;
}

std::vector<std::vector<std::size_t>> matroid_components(const LinearCode& c) {
  const std::size_t n = c.length();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // fundamental circuit of a non-pivot column j: j plus the pivots of rows having a 1 in j
  const auto& g = c.generators();
  const auto& piv = c.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    for (std::size_t r = 0; r < g.nrows(); ++r) {
      if (g.row(r).get(j)) parent[find(piv[r])] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == n) {
      slot[root] = comps.size();
      comps.emplace_back();
    }
    comps[slot[root]].push_back(i);
  }
  return comps;
}

Decomposition full_decomposition(const LinearCode& c) {
  if (!is_max_totally_isotropic(c)) throw std::invalid_argument("full_decomposition: code is not maximal totally isotropic");
  std::vector<std::size_t> all(c.length());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Piece> pieces;
  decompose_into(c, all, pieces);
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.coords.front() < b.coords.front(); });
  Decomposition d;
  d.n = c.length();
  for (auto& p : pieces) {
    if (matroid_components(p.code).size() != 1) throw InvariantViolation("full_decomposition: a factor still splits");
    d.blocks.push_back(std::move(p.coords));
    d.factors.push_back(std::move(p.code));
  }
  if (reassemble(d) != c) throw InvariantViolation("full_decomposition: factors do not reassemble the code");
  return d;
}

LinearCode reassemble(const Decomposition& d) {
  std::vector<BitVec> rows;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& block = d.blocks[b];
    if (d.factors[b].length() != block.size()) throw std::invalid_argument("reassemble: factor length does not match block");
    for (const auto& r : d.factors[b].generators().rows()) {
      BitVec v(d.n);
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (r.get(k)) v.set(block[k]);
      }
      rows.push_back(v);
    }
  }
  return LinearCode(d.n, rows);
}

std::string describe(const Decomposition& d) {
  std::ostringstream os;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (b > 0) os << " | ";
    const auto& blk = d.blocks[b];
    const bool run = blk.back() - blk.front() + 1 == blk.size();
    os << '{';
    if (run && blk.size() > 1) {
      os << blk.front() << ".." << blk.back();
    } else {
      for (std::size_t k = 0; k < blk.size(); ++k) os << (k ? "," : "") << blk[k];
    }
    os << "} ";
    const LinearCode& f = d.factors[b];
    if (f == named::i1()) {
      os << "i1";
    } else if (f == LinearCode(1)) {
      os << "0";
    } else if (f == named::i2()) {
      os << "i2";
    } else {
      os << '[' << f.length() << ',' << f.dimension() << ',' << f.min_distance() << ']';
    }
  }
  return os.str();
}

std::vector<CorollaryCheck> verify_distance_corollaries(const std::vector<CodeClass>& classes) {
  std::vector<CorollaryCheck> out;
  for (std::size_t idx = 0; idx < classes.size(); ++idx) {
    const LinearCode& l = classes[idx].rep;
    const std::size_t d = l.min_distance();
    if (d != 1 && d != 2) continue;
    CorollaryCheck ck{idx, d, false, ""};
    const std::size_t n = l.length();
    // both shapes split off a proper factor unless M is empty
    if (n > 2 && !find_splitting_vector(l)) {
      ck.shape = "no splitting vector";
      out.push_back(ck);
      continue;
    }
    if (d == 1) {
      // zero coordinates of l
      std::vector<std::size_t> zeros;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& rows = l.generators().rows();
        if (std::none_of(rows.begin(), rows.end(), [j](const BitVec& r) { return r.get(j); })) zeros.push_back(j);
      }
      for (std::size_t i = 0; i < n && !ck.pass; ++i) {
        BitVec unit(n);
        unit.set(i);
        if (!l.contains(unit)) continue;
        std::vector<std::size_t> rest_coords = complement_of({i}, n);
        const LinearCode rest = project(l, rest_coords);
        if (rest.is_even() && is_max_totally_isotropic(rest) && distance_at_least(rest, 2)) {
          ck.pass = true;
          ck.shape = "i1 x M";
        } else if (rest.is_even() && rest.length() % 2 == 1) {
          const LinearCode m = extend(rest, BitVec::ones(rest.length()));
          if (is_max_totally_isotropic(m) && even_subcode(m) == rest && distance_at_least(m, 2)) {
            ck.pass = true;
            ck.shape = "i1 x M+";
          }
        }
        for (std::size_t j : zeros) {
          if (ck.pass) break;
          const LinearCode m = project(l, complement_of({std::min(i, j), std::max(i, j)}, n));
          if (m.is_even() && is_max_totally_isotropic(m) && distance_at_least(m, 2)) {
            ck.pass = true;
            ck.shape = "i2' x M";
          }
        }
      }
      if (!ck.pass) ck.shape = "no weight-1 shape fits";
    } else {
      // peel off i2 factors along weight-2 words
      LinearCode m = l;
      std::size_t k = 0;
      bool ok = true;
      while (ok && m.dimension() > 0 && m.min_distance() == 2) {
        const BitVec* pair = nullptr;
        const auto words = m.codewords();
        for (const auto& w : words) {
          if (w.weight() == 2 && (pair == nullptr || w < *pair)) pair = &w;
        }
        const LinearCode prod = product_span(m);
        for (const auto& r : prod.generators().rows()) ok = ok && !alt_inner(*pair, r);
        if (!ok) break;
        const Split sp = split(m, *pair);
        ok = sp.first == named::i2();
        m = sp.second;
        ++k;
      }
      ok = ok && k >= 1 && is_max_totally_isotropic(m) && distance_at_least(m, 3);
      ck.pass = ok;
      ck.shape = ok ? "i2^" + std::to_string(k) + " x M" : "i2 peeling failed";
    }
    out.push_back(ck);
  }
  return out;
}

}  // namespace isocodes
