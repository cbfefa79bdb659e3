#include "isocodes/selfdual.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

#include "isocodes/equivalence.hpp"
#include "isocodes/errors.hpp"

namespace isocodes {

namespace {

std::vector<CanonicalCert> certs_for(std::span<const LinearCode> codes, Exec exec) {
  return exec.parallel ? canonical_forms_parallel(codes, exec.jobs) : canonical_forms_serial(codes);
}

void require_certified(const SelfDualSet& sd) {
  const MassCheck m = selfdual_mass(sd);
  if (!m.pass()) {
    throw VerificationFailure("self-dual mass check failed at n=" + std::to_string(sd.n) + ": sum " +
                              to_fraction_string(m.lhs) + " vs " + to_fraction_string(m.rhs) + ", deficit " +
                              to_fraction_string(m.deficit()));
  }
}

// Sorts reps by canonical form so every source yields the same order.
SelfDualSet assemble(std::size_t n, std::map<BitMatrix, Integer> classes) {
  SelfDualSet sd;
  sd.n = n;
  for (auto& [canon, aut] : classes) {
    sd.reps.emplace_back(canon);
    sd.aut_orders.push_back(aut);
  }
  return sd;
}

// Even words outside c, one per nonzero class of (even words)/c.
std::vector<BitVec> even_quotient_basis(const LinearCode& c) {
  const std::size_t n = c.length();
  BitMatrix span = c.generators();
  std::size_t rank = span.nrows();
  std::vector<BitVec> out;
  for (std::size_t i = 1; i < n; ++i) {
    BitVec y = BitVec::unit(n, 0);
    y.set(i);
    span.append_row(y);
    const std::size_t r = rref(span).rank;
    if (r > rank) {
      rank = r;
      out.push_back(y);
    } else {
      BitMatrix trimmed(n, std::vector<BitVec>(span.rows().begin(), span.rows().end() - 1));
      span = std::move(trimmed);
    }
  }
  return out;
}

// Both self-dual neighbors through each codimension-one subcode containing 1.
std::vector<LinearCode> neighbors(const LinearCode& c) {
  const std::size_t n = c.length();
  const auto basis = even_quotient_basis(c);
  std::vector<LinearCode> out;
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    BitVec y(n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((mask >> i) & 1U) y ^= basis[i];
    }
    // D = c meets y-perp; pick a generator off D and fold the rest into D
    std::vector<BitVec> d;
    const BitVec* off = nullptr;
    for (const auto& g : c.generators().rows()) {
      if (dot(g, y)) {
        if (off == nullptr) {
          off = &g;
          continue;
        }
        d.push_back(g ^ *off);
      } else {
        d.push_back(g);
      }
    }
    if (off == nullptr) throw InvariantViolation("even quotient representative lies in the code");
    std::vector<BitVec> a = d;
    a.push_back(y);
    std::vector<BitVec> b = std::move(d);
    b.push_back(y ^ *off);
    out.emplace_back(n, a);
    out.emplace_back(n, b);
  }
  return out;
}

}  // namespace

Integer t_n(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("t_n needs even n >= 2");
  Integer t = 1;
  for (std::size_t i = 1; i + 1 <= n / 2; ++i) t *= pow2(static_cast<unsigned>(i)) + 1;
  return t;
}

MassCheck selfdual_mass(const SelfDualSet& sd) {
  const Integer nf = factorial(static_cast<unsigned>(sd.n));
  Rational sum = 0;
  for (const auto& a : sd.aut_orders) sum += Rational(nf, a);
  return {sum, Rational(t_n(sd.n))};
}

BitMatrix normalize_ones_first(const LinearCode& k) {
  const std::size_t n = k.length();
  const BitVec ones = BitVec::ones(n);
  if (!k.contains(ones)) throw std::invalid_argument("normalize_ones_first: code does not contain 1");
  std::vector<BitVec> rows = k.generators().rows();
  const BitVec c = ones ^ k.generators().row_sum();
  if (!c.is_zero()) {
    // c = sum beta_j r_j; a row with beta_j = 0 can absorb c
    const auto& piv = k.pivots();
    std::size_t j = 0;
    while (j < piv.size() && c.get(piv[j])) ++j;
    if (j == piv.size()) throw InvariantViolation("no row available to absorb the correction");
    rows[j] ^= c;
  }
  return BitMatrix(n, std::move(rows));
}

SelfDualSet parse_selfdual_db(std::istream& in, Exec exec) {
  const auto records = parse_code_records(in);
  const std::size_t n = records.front().n;
  std::vector<LinearCode> codes;
  for (const auto& r : records) {
    if (r.n != n) throw ParseError(r.first_line, "all records must share one length");
    LinearCode c(r.rows);
    if (c.dimension() != r.rows.nrows()) throw ParseError(r.first_line, "generator rows are dependent");
    if (!is_self_dual(c)) throw VerificationFailure("record at line " + std::to_string(r.first_line) + " is not self-dual");
    codes.push_back(std::move(c));
  }
  const auto certs = certs_for(codes, exec);
  std::map<BitMatrix, Integer> classes;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (!classes.emplace(certs[i].canon, certs[i].aut_order).second) {
      throw VerificationFailure("record at line " + std::to_string(records[i].first_line) +
                                " repeats an earlier class");
    }
  }
  SelfDualSet sd = assemble(n, std::move(classes));
  require_certified(sd);
  return sd;
}

SelfDualSet generate_selfdual_reps(std::size_t n, Exec exec) {
  if (n < 2 || n % 2 != 0 || n > 16) throw std::invalid_argument("native generation needs even 2 <= n <= 16");
  const Integer target = t_n(n);
  const Integer nf = factorial(static_cast<unsigned>(n));

  const LinearCode seed = named::power(named::i2(), n / 2);
  const CanonicalCert seed_cert = canonical_form(seed);
  std::map<BitMatrix, Integer> classes{{seed_cert.canon, seed_cert.aut_order}};
  Integer mass = nf / seed_cert.aut_order;
  std::vector<LinearCode> frontier{LinearCode(seed_cert.canon)};

  while (mass < target && !frontier.empty()) {
    std::vector<LinearCode> candidates;
    for (const auto& c : frontier) {
      auto nb = neighbors(c);
      candidates.insert(candidates.end(), std::make_move_iterator(nb.begin()), std::make_move_iterator(nb.end()));
    }
    const auto certs = certs_for(candidates, exec);
    std::vector<LinearCode> next;
    // serial merge in candidate order keeps the search deterministic
    for (const auto& cert : certs) {
      if (classes.emplace(cert.canon, cert.aut_order).second) {
        mass += nf / cert.aut_order;
        next.emplace_back(cert.canon);
      }
    }
    frontier = std::move(next);
  }
  SelfDualSet sd = assemble(n, std::move(classes));
  for (const auto& r : sd.reps) {
    if (!is_self_dual(r)) throw InvariantViolation("generated code is not self-dual");
  }
  require_certified(sd);
  return sd;
}

SelfDualSet cached_selfdual_reps(std::size_t n, Exec exec) {
  const char* dir = std::getenv("ISOCODES_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return generate_selfdual_reps(n, exec);
  const std::filesystem::path path = std::filesystem::path(dir) / ("selfdual_" + std::to_string(n) + ".txt");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    SelfDualSet sd = parse_selfdual_db(in, exec);
    if (sd.n != n) throw VerificationFailure("cache file " + path.string() + " holds a different length");
    return sd;
  }
  SelfDualSet sd = generate_selfdual_reps(n, exec);
  std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    write_selfdual_set(out, sd);
  }
  std::filesystem::rename(tmp, path);
  return sd;
}

void write_selfdual_set(std::ostream& out, const SelfDualSet& sd) {
  std::vector<BitMatrix> mats;
  for (const auto& r : sd.reps) mats.push_back(normalize_ones_first(r));
  out << "# self-dual codes of length " << sd.n << ", " << sd.reps.size() << " classes\n";
  write_code_records(out, mats);
}

}  // namespace isocodes
