#include "isocodes/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "isocodes/errors.hpp"

namespace isocodes {

namespace {

using Colors = std::vector<std::uint32_t>;

// Coordinate/codeword incidence plus the search state for one code.
//
// Colors are start positions of cells in an ordered partition, so a
// refinement step that sorts by (old color, signature) keeps every old cell
// in place and splits it in signature order. Nothing here looks at input
// labels, which is what makes the resulting tree label-invariant.
class CanonSearch {
 public:
  CanonSearch(const LinearCode& c, const CanonOptions& opt) : code_(c), opt_(opt), n_(c.length()) {
    if (n_ > kCanonMaxLength) throw CapExceeded("canonical form supports n <= 64");
    build_words();
  }

  CanonicalCert run() {
    Colors ccol(n_, 0);
    Colors wcol(words_.size(), 0);
    // zero columns sit in their own trailing cell and are never individualized
    for (std::size_t i = 0; i < n_; ++i) {
      if (!used_[i]) ccol[i] = static_cast<std::uint32_t>(active_);
    }
    init_word_colors(wcol);
    refine(ccol, wcol);
    std::vector<std::uint32_t> prefix;
    search(0, ccol, wcol, prefix);

    CanonicalCert cert;
    cert.canon = best_key_;
    cert.perm = best_perm_;
    cert.aut_gens = gens_;
    cert.aut_order = aut_;
    cert.aut_order *= factorial(static_cast<unsigned>(n_ - active_));
    return cert;
  }

 private:
  void build_words() {
    used_.assign(n_, false);
    const auto& g = code_.generators().rows();
    for (const auto& r : g) {
      for (std::size_t i : r.support()) used_[i] = true;
    }
    active_ = static_cast<std::size_t>(std::count(used_.begin(), used_.end(), true));
    if (code_.dimension() == 0) return;

    std::vector<std::vector<Word>> by_weight(n_ + 1);
    for (const BitVec& w : code_.codewords()) {
      if (!w.is_zero()) by_weight[w.weight()].push_back(w.word0());
    }
    // smallest weight classes until they span, then more while under budget
    BitMatrix span(n_);
    std::size_t rank = 0;
    for (std::size_t wt = 1; wt <= n_; ++wt) {
      auto& cls = by_weight[wt];
      if (cls.empty()) continue;
      const bool spanning = rank == code_.dimension();
      if (spanning && words_.size() + cls.size() > opt_.word_budget) break;
      std::sort(cls.begin(), cls.end());
      for (Word w : cls) {
        words_.push_back(w);
        if (rank < code_.dimension()) {
          span.append_row(BitVec::from_word(n_, w));
        }
      }
      if (rank < code_.dimension()) {
        RrefResult r = rref(span);
        rank = r.rank;
        span = std::move(r.matrix);
      }
    }
    word_weight_.resize(words_.size());
    coord_words_.assign(n_, {});
    word_coords_.assign(words_.size(), {});
    for (std::size_t j = 0; j < words_.size(); ++j) {
      word_weight_[j] = static_cast<std::uint32_t>(std::popcount(words_[j]));
      for (Word x = words_[j]; x != 0; x &= x - 1) {
        const auto i = static_cast<std::uint32_t>(std::countr_zero(x));
        word_coords_[j].push_back(i);
        coord_words_[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
  }

  void init_word_colors(Colors& wcol) const {
    std::vector<std::uint32_t> idx(words_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return word_weight_[a] < word_weight_[b]; });
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const bool same = p > 0 && word_weight_[idx[p]] == word_weight_[idx[p - 1]];
      wcol[idx[p]] = same ? wcol[idx[p - 1]] : static_cast<std::uint32_t>(p);
    }
  }

  // One splitting pass over `items`. Returns true if any cell split.
  template <typename Adj>
  static bool split_pass(Colors& col, const Colors& other, const Adj& adj, std::size_t count) {
    std::vector<std::vector<std::uint32_t>> sig(count);
    for (std::size_t v = 0; v < count; ++v) {
      auto& s = sig[v];
      s.reserve(adj[v].size());
      for (auto u : adj[v]) s.push_back(other[u]);
      std::sort(s.begin(), s.end());
    }
    std::vector<std::uint32_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (col[a] != col[b]) return col[a] < col[b];
      if (sig[a] != sig[b]) return sig[a] < sig[b];
      return a < b;
    });
    bool changed = false;
    Colors next(count);
    for (std::size_t p = 0; p < count; ++p) {
      const std::uint32_t v = idx[p];
      if (p > 0 && col[v] == col[idx[p - 1]] && sig[v] == sig[idx[p - 1]]) {
        next[v] = next[idx[p - 1]];
      } else {
        next[v] = static_cast<std::uint32_t>(p);
        if (p > 0 && col[v] == col[idx[p - 1]]) changed = true;
      }
    }
    col = std::move(next);
    return changed;
  }

  void refine(Colors& ccol, Colors& wcol) const {
    if (words_.empty()) return;
    // zero columns have no incident words; their color (active_) is already
    // past every other cell, so sorting keeps them last
    while (true) {
      const bool a = split_pass(ccol, wcol, coord_words_, n_);
      const bool b = split_pass(wcol, ccol, word_coords_, words_.size());
      if (!a && !b) break;
    }
  }

  // First smallest nontrivial cell among active coordinates. Returns its
  // members in increasing input order; empty when discrete.
  std::vector<std::uint32_t> target_cell(const Colors& ccol) const {
    std::vector<std::uint32_t> size(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (used_[i]) ++size[ccol[i]];
    }
    std::uint32_t best = 0;
    std::uint32_t best_size = 0;
    for (std::uint32_t c = 0; c < n_; ++c) {
      if (size[c] >= 2 && (best_size == 0 || size[c] < best_size)) {
        best = c;
        best_size = size[c];
      }
    }
    std::vector<std::uint32_t> out;
    if (best_size == 0) return out;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (used_[i] && ccol[i] == best) out.push_back(i);
    }
    return out;
  }

  void individualize(Colors& ccol, std::uint32_t v) const {
    const std::uint32_t s = ccol[v];
    for (std::size_t i = 0; i < n_; ++i) {
      if (used_[i] && ccol[i] == s && i != v) ccol[i] = s + 1;
    }
  }

  Permutation leaf_perm(const Colors& ccol) const {
    Permutation lam(n_);
    std::uint32_t next_zero = static_cast<std::uint32_t>(active_);
    for (std::uint32_t i = 0; i < n_; ++i) lam[i] = used_[i] ? ccol[i] : next_zero++;
    return lam;
  }

  BitMatrix leaf_key(const Permutation& lam) const {
    return rref(permute(code_, lam).generators()).matrix;
  }

  static Permutation inverse(const Permutation& p) {
    Permutation inv(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
  }

  static std::size_t common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void add_generator(const Permutation& lam, const Permutation& ref_inv) {
    Permutation g(n_);
    bool identity = true;
    for (std::uint32_t i = 0; i < n_; ++i) {
      g[i] = ref_inv[lam[i]];
      identity = identity && g[i] == i;
    }
    if (!identity) gens_.push_back(std::move(g));
  }

  // Orbit partition (as representative per point) of the group generated by
  // the generators that fix `prefix` pointwise.
  std::vector<std::uint32_t> orbits_fixing(const std::vector<std::uint32_t>& prefix) const {
    std::vector<std::uint32_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : gens_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](std::uint32_t p) { return g[p] == p; })) continue;
      for (std::uint32_t i = 0; i < n_; ++i) {
        const auto a = find(i);
        const auto b = find(g[i]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::uint32_t i = 0; i < n_; ++i) parent[i] = find(i);
    return parent;
  }

  // Returns the level whose child loop should continue.
  std::size_t search(std::size_t level, const Colors& ccol, const Colors& wcol, std::vector<std::uint32_t>& prefix) {
    if (++nodes_ > opt_.node_cap) throw CapExceeded("canonical form search exceeded node cap");
    const auto cell = target_cell(ccol);
    const std::size_t parent_level = level == 0 ? 0 : level - 1;
    if (cell.empty()) return visit_leaf(ccol, prefix, parent_level);

    // first-path nodes are exactly those entered before any leaf
    const bool on_first_path = !have_first_;
    std::vector<std::uint32_t> explored;
    std::size_t seen_gens = static_cast<std::size_t>(-1);
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t v : cell) {
      if (!explored.empty()) {
        if (seen_gens != gens_.size()) {
          orbit = orbits_fixing(prefix);
          seen_gens = gens_.size();
        }
        const bool pruned = std::any_of(explored.begin(), explored.end(),
                                        [&](std::uint32_t u) { return orbit[u] == orbit[v]; });
        if (pruned) continue;
      }
      Colors c2 = ccol;
      Colors w2 = wcol;
      individualize(c2, v);
      refine(c2, w2);
      prefix.push_back(v);
      const std::size_t r = search(level + 1, c2, w2, prefix);
      prefix.pop_back();
      explored.push_back(v);
      if (r < level) return r;
    }
    if (on_first_path) {
      // orbit of the first child under the stabilizer of this node
      const auto orb = orbits_fixing(prefix);
      const std::uint32_t rep = orb[cell.front()];
      std::size_t size = 0;
      for (std::uint32_t i = 0; i < n_; ++i) size += orb[i] == rep;
      aut_ *= size;
    }
    return parent_level;
  }

  std::size_t visit_leaf(const Colors& ccol, const std::vector<std::uint32_t>& prefix, std::size_t parent_level) {
    Permutation lam = leaf_perm(ccol);
    BitMatrix key = leaf_key(lam);
    if (!have_first_) {
      have_first_ = true;
      first_prefix_ = prefix;
      first_inv_ = inverse(lam);
      best_prefix_ = prefix;
      best_key_ = key;
      best_perm_ = lam;
      best_inv_ = first_inv_;
      return parent_level;
    }
    if (key == first_key()) {
      add_generator(lam, first_inv_);
      return common_prefix(prefix, first_prefix_);
    }
    if (key == best_key_) {
      add_generator(lam, best_inv_);
      return common_prefix(prefix, best_prefix_);
    }
    if (key < best_key_) {
      best_key_ = std::move(key);
      best_inv_ = inverse(lam);
      best_perm_ = std::move(lam);
      best_prefix_ = prefix;
    }
    return parent_level;
  }

  const BitMatrix& first_key() {
    if (!first_key_cached_) {
      Permutation lam = inverse(first_inv_);
      first_key_ = leaf_key(lam);
      first_key_cached_ = true;
    }
    return first_key_;
  }

  const LinearCode& code_;
  CanonOptions opt_;
  std::size_t n_;
  std::size_t active_ = 0;
  std::vector<bool> used_;
  std::vector<Word> words_;
  std::vector<std::uint32_t> word_weight_;
  std::vector<std::vector<std::uint32_t>> coord_words_;
  std::vector<std::vector<std::uint32_t>> word_coords_;

  std::size_t nodes_ = 0;
  bool have_first_ = false;
  std::vector<std::uint32_t> first_prefix_;
  Permutation first_inv_;
  bool first_key_cached_ = false;
  BitMatrix first_key_;
  std::vector<std::uint32_t> best_prefix_;
  BitMatrix best_key_;
  Permutation best_perm_;
  Permutation best_inv_;
  std::vector<Permutation> gens_;
  Integer aut_ = 1;
};

void check_brute_force(std::size_t n) {
  if (n > kBruteForceMaxLength) throw CapExceeded("brute force equivalence supports n <= 8");
}

}  // namespace

CanonicalCert canonical_form(const LinearCode& c, const CanonOptions& opt) {
  if (c.dimension() > kEnumerationCap) throw CapExceeded("canonical form needs k <= 24");
  return CanonSearch(c, opt).run();
}

bool are_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length()) throw std::invalid_argument("are_equivalent: length mismatch");
  if (a.dimension() != b.dimension()) return false;
  if (a.weight_distribution() != b.weight_distribution()) return false;
  return canonical_form(a).canon == canonical_form(b).canon;
}

Integer aut_order(const LinearCode& c) { return canonical_form(c).aut_order; }

bool is_automorphism(const LinearCode& c, std::span<const std::uint32_t> perm) {
  return permute(c, perm) == c;
}

bool brute_force_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length()) throw std::invalid_argument("brute_force_equivalent: length mismatch");
  check_brute_force(a.length());
  if (a.dimension() != b.dimension()) return false;
  Permutation p(a.length());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (permute(a, p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Integer brute_force_aut_order(const LinearCode& c) {
  check_brute_force(c.length());
  Permutation p(c.length());
  std::iota(p.begin(), p.end(), 0);
  Integer count = 0;
  do {
    if (permute(c, p) == c) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

std::vector<CanonicalCert> canonical_forms_serial(std::span<const LinearCode> codes) {
  std::vector<CanonicalCert> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(canonical_form(c));
  return out;
}

std::vector<CanonicalCert> canonical_forms_parallel(std::span<const LinearCode> codes, int jobs) {
  std::vector<CanonicalCert> out(codes.size());
  std::exception_ptr err;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(codes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = canonical_form(codes[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(isocodes_canon_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace isocodes
