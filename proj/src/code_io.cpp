#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "isocodes/code.hpp"
#include "isocodes/errors.hpp"

namespace isocodes {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Content lines grouped into records; '%' lines separate.
std::vector<std::vector<Line>> read_groups(std::istream& in, std::size_t& last_line) {
  std::vector<std::vector<Line>> groups(1);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    if (t[0] == '%') {
      groups.emplace_back();
      continue;
    }
    groups.back().push_back({number, std::move(t)});
  }
  last_line = number;
  return groups;
}

CodeRecord parse_group(const std::vector<Line>& lines, std::size_t eof_line) {
  if (lines.empty()) throw ParseError(eof_line, "expected header 'n k'");
  const Line& head = lines.front();
  std::istringstream hs(head.text);
  long long n = -1;
  long long k = -1;
  std::string extra;
  if (!(hs >> n >> k) || n < 0 || k < 0 || (hs >> extra)) {
    throw ParseError(head.number, "expected header 'n k' with nonnegative integers, got '" + head.text + "'");
  }
  CodeRecord rec;
  rec.n = static_cast<std::size_t>(n);
  rec.rows = BitMatrix(rec.n);
  rec.first_line = head.number;
  const std::size_t want = static_cast<std::size_t>(k);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (i > want) throw ParseError(l.number, "more rows than the declared " + std::to_string(want));
    if (l.text.size() != rec.n) {
      throw ParseError(l.number, "row has " + std::to_string(l.text.size()) + " symbols, expected " +
                                     std::to_string(rec.n));
    }
    if (l.text.find_first_not_of("01") != std::string::npos) {
      throw ParseError(l.number, "row may contain only '0' and '1'");
    }
    rec.rows.append_row(BitVec::from_string(l.text));
  }
  if (rec.rows.nrows() != want) {
    const std::size_t at = lines.size() > 1 ? lines.back().number : head.number;
    throw ParseError(at, "expected " + std::to_string(want) + " rows, found " + std::to_string(rec.rows.nrows()));
  }
  return rec;
}

}  // namespace

CodeRecord parse_code_record(std::istream& in) {
  std::size_t last = 0;
  auto groups = read_groups(in, last);
  if (groups.size() != 1) throw ParseError(0, "expected a single code record, found '%' separators");
  return parse_group(groups.front(), last);
}

std::vector<CodeRecord> parse_code_records(std::istream& in) {
  std::size_t last = 0;
  auto groups = read_groups(in, last);
  std::vector<CodeRecord> out;
  for (const auto& g : groups) {
    if (g.empty()) continue;  // tolerate leading/trailing/double separators
    out.push_back(parse_group(g, last));
  }
  if (out.empty()) throw ParseError(last, "no code records found");
  return out;
}

void write_code_record(std::ostream& out, const BitMatrix& rows) {
  out << rows.ncols() << ' ' << rows.nrows() << '\n';
  for (const auto& r : rows.rows()) out << r.to_string() << '\n';
}

void write_code_records(std::ostream& out, const std::vector<BitMatrix>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0) out << "%\n";
    write_code_record(out, records[i]);
  }
}

}  // namespace isocodes
