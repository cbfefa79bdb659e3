#include "isocodes/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "isocodes/equivalence.hpp"
#include "isocodes/errors.hpp"

namespace isocodes {

namespace {

std::vector<CanonicalCert> certs_for(std::span<const LinearCode> codes, Exec exec) {
  return exec.parallel ? canonical_forms_parallel(codes, exec.jobs) : canonical_forms_serial(codes);
}

CodeClass make_class(const CanonicalCert& cert, std::size_t parent) {
  CodeClass c;
  c.rep = LinearCode(cert.canon);
  c.aut_order = cert.aut_order;
  c.type = type_of(c.rep);
  c.min_distance = c.rep.min_distance();
  c.weights = c.rep.weight_distribution();
  c.parent = parent;
  return c;
}

std::vector<CodeClass> sorted_classes(std::map<BitMatrix, CodeClass> m) {
  std::vector<CodeClass> out;
  out.reserve(m.size());
  for (auto& [canon, cls] : m) out.push_back(std::move(cls));
  return out;
}

}  // namespace

std::vector<LinearCode> complements_of_ones(const LinearCode& k, Exec exec) {
  const std::size_t n = k.length();
  const BitMatrix g = normalize_ones_first(k);
  const std::size_t m = g.nrows();
  if (m == 0) throw std::invalid_argument("complements_of_ones: zero code");
  const BitVec ones = BitVec::ones(n);
  std::vector<LinearCode> all;
  all.reserve(std::size_t{1} << (m - 1));
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << (m - 1)); ++a) {
    std::vector<BitVec> rows;
    for (std::size_t i = 1; i < m; ++i) rows.push_back((a >> (i - 1)) & 1U ? g.row(i) ^ ones : g.row(i));
    all.emplace_back(n, rows);
  }
  // equivalent complements are exactly the Aut(k)-orbits, since any
  // permutation carrying one to another also fixes k = k0 + <1>
  const auto certs = certs_for(all, exec);
  std::map<BitMatrix, LinearCode> reps;
  for (const auto& c : certs) reps.emplace(c.canon, LinearCode(c.canon));
  std::vector<LinearCode> out;
  for (auto& [canon, code] : reps) out.push_back(std::move(code));
  return out;
}

std::pair<LinearCode, LinearCode> odd_pair_from_complement(const LinearCode& k0) {
  const LinearCode perp = perp_alt(k0);
  const BitVec* best = nullptr;
  const auto words = perp.codewords();
  for (const auto& w : words) {
    if (w.parity() && (best == nullptr || w < *best)) best = &w;
  }
  if (best == nullptr) throw InvariantViolation("complement has no odd vector in its orthogonal space");
  const LinearCode l = extend(k0, *best);
  const LinearCode lp = extend(k0, *best ^ BitVec::ones(k0.length()));
  if (!is_odd_lagrangian(l) || !is_odd_lagrangian(lp)) throw InvariantViolation("odd pair is not Lagrangian");
  return {l, lp};
}

std::vector<CodeClass> classify_odd_lagrangians(const SelfDualSet& sd, Exec exec) {
  // work items: (parent, complement)
  std::vector<LinearCode> pairs;
  std::vector<std::size_t> parent_of;
  for (std::size_t p = 0; p < sd.reps.size(); ++p) {
    for (const auto& k0 : complements_of_ones(sd.reps[p], exec)) {
      auto [l, lp] = odd_pair_from_complement(k0);
      pairs.push_back(std::move(l));
      pairs.push_back(std::move(lp));
      parent_of.push_back(p);
    }
  }
  const auto certs = certs_for(pairs, exec);
  std::map<BitMatrix, CodeClass> classes;
  for (std::size_t i = 0; i < parent_of.size(); ++i) {
    const auto& a = certs[2 * i];
    const auto& b = certs[2 * i + 1];
    for (const CanonicalCert* c : {&a, &b}) {
      if (c == &b && b.canon == a.canon) break;  // L and tau(L) equivalent: one class
      if (classes.count(c->canon)) {
        throw InvariantViolation("odd Lagrangian reached from two different complements");
      }
      classes.emplace(c->canon, make_class(*c, parent_of[i]));
    }
  }
  return sorted_classes(std::move(classes));
}

std::vector<CodeClass> classify_odd_length(const SelfDualSet& sd, Exec exec) {
  std::vector<LinearCode> codes;
  std::vector<std::size_t> parent_of;
  for (std::size_t p = 0; p < sd.reps.size(); ++p) {
    for (std::size_t j = 0; j < sd.n; ++j) {
      const LinearCode m = shorten(sd.reps[p], j);
      codes.push_back(extend(m, BitVec::ones(m.length())));
      parent_of.push_back(p);
    }
  }
  const auto certs = certs_for(codes, exec);
  std::map<BitMatrix, CodeClass> classes;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (!classes.count(certs[i].canon)) classes.emplace(certs[i].canon, make_class(certs[i], parent_of[i]));
  }
  auto out = sorted_classes(std::move(classes));
  for (const auto& c : out) {
    if (!is_max_totally_isotropic(c.rep)) throw InvariantViolation("shortened code is not maximal isotropic");
  }
  return out;
}

std::vector<CodeClass> selfdual_classes(const SelfDualSet& sd) {
  std::vector<CodeClass> out;
  for (std::size_t i = 0; i < sd.reps.size(); ++i) {
    CanonicalCert cert;
    cert.canon = sd.reps[i].generators();
    cert.aut_order = sd.aut_orders[i];
    out.push_back(make_class(cert, i));
  }
  return out;
}

MassCheck verify_odd_mass(const std::vector<CodeClass>& classes, std::size_t n) {
  Rational sum = 0;
  for (const auto& c : classes) sum += Rational(Integer(1), c.aut_order);
  const Rational rhs(pow2(static_cast<unsigned>(n / 2)) * t_n(n), factorial(static_cast<unsigned>(n)));
  return {sum, rhs};
}

MassCheck verify_odd_length_mass(const std::vector<CodeClass>& classes, std::size_t n) {
  if (n % 2 == 0) throw std::invalid_argument("verify_odd_length_mass needs odd n");
  const Integer nf = factorial(static_cast<unsigned>(n));
  Rational sum = 0;
  for (const auto& c : classes) sum += Rational(nf, c.aut_order);
  return {sum, Rational(t_n(n + 1))};
}

TableRow table_row(const std::vector<CodeClass>& classes, std::size_t n) {
  TableRow row;
  row.n = n;
  for (const auto& c : classes) {
    (c.type == CodeType::TypeI ? row.count_typeI : row.count_typeII) += 1;
    row.d_max = std::max(row.d_max, c.min_distance);
  }
  for (const auto& c : classes) {
    if (c.min_distance != row.d_max) continue;
    (c.type == CodeType::TypeI ? row.count_max_typeI : row.count_max_typeII) += 1;
  }
  return row;
}

std::vector<std::vector<std::size_t>> duplicate_weight_distributions(const std::vector<CodeClass>& classes) {
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < classes.size(); ++i) groups[classes[i].weights].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [w, idx] : groups) {
    if (idx.size() >= 2) out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isocodes
