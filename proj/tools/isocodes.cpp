#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>

#include "isocodes/decompose.hpp"
#include "isocodes/errors.hpp"
#include "isocodes/report.hpp"
#include "isocodes/verify.hpp"
#include "isocodes/weight_enum.hpp"

using namespace isocodes;

namespace {

enum Exit { kOk = 0, kVerify = 1, kUsage = 2, kCap = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Exec exec_for(int jobs, bool serial) { return Exec{!serial, jobs}; }

LinearCode read_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  const CodeRecord rec = parse_code_record(in);
  const LinearCode c(rec.rows);
  if (c.dimension() != rec.rows.nrows()) throw ParseError(rec.first_line, "generator rows are dependent");
  return c;
}

// "a..b" or "a"
std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  static const std::regex re(R"((\d+)(?:\.\.(\d+))?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("bad range '" + s + "', expected a..b");
  const std::size_t lo = std::stoul(m[1]);
  const std::size_t hi = m[2].matched ? std::stoul(m[2]) : lo;
  if (hi < lo) throw UsageError("empty range '" + s + "'");
  return {lo, hi};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_classify(std::size_t n, const std::string& source, const std::string& format, const std::string& output,
                 Exec exec, bool timing) {
  if (n < 2 || n % 2 != 0 || n > 24) throw UsageError("--n must be even with 2 <= n <= 24");
  const auto t0 = std::chrono::steady_clock::now();
  SelfDualSet sd;
  if (source == "generate") {
    if (n > 16) throw UsageError("native generation stops at n = 16; pass --selfdual FILE");
    sd = cached_selfdual_reps(n, exec);
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot open " + source);
    sd = parse_selfdual_db(in, exec);
    if (sd.n != n) throw UsageError("database holds length " + std::to_string(sd.n) + ", not " + std::to_string(n));
  }
  const double sd_time = seconds_since(t0);
  const auto t1 = std::chrono::steady_clock::now();
  ClassificationReport r = build_classification_report(sd, exec);
  if (timing) r.timing = Timing{sd_time, seconds_since(t1)};
  if (format == "json") {
    emit(to_json(r), output);
  } else {
    emit(csv_header() + "\n" + csv_row(r.row) + "\n", output);
  }
  if (!r.pass()) {
    std::cerr << "mass check failed: " << to_fraction_string(r.mass.lhs) << " vs " << to_fraction_string(r.mass.rhs) << "\n";
    return kVerify;
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const std::string& range, Exec exec) {
  const auto [lo, hi] = parse_range(range);
  const SuiteResult res = run_suite(suite, lo, hi, exec);
  for (const auto& c : res.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.witness.empty()) std::cout << "  [" << c.witness << "]";
    std::cout << "\n";
  }
  std::cout << res.suite << ": " << res.checks.size() - res.failures() << "/" << res.checks.size() << " passed\n";
  return res.pass() ? kOk : kVerify;
}

int cmd_wenum(const std::string& path, bool json) {
  const LinearCode c = read_code(path);
  const WeightEnumerator w = wenum(c);
  const bool maxiso = is_max_totally_isotropic(c);
  if (json) {
    nlohmann::ordered_json j{{"schema_version", kReportSchemaVersion},
                             {"n", c.length()},
                             {"k", c.dimension()},
                             {"weight_enumerator", w.to_string()},
                             {"weight_distribution", c.weight_distribution()},
                             {"min_distance", c.min_distance()},
                             {"maximal_totally_isotropic", maxiso}};
    if (maxiso) j["type"] = to_string(type_of(c));
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "n=" << c.length() << " k=" << c.dimension() << "\n"
            << "W(x,y) = " << w.to_string() << "\n"
            << "distribution: " << w.to_csv() << "\n"
            << "min_distance: " << c.min_distance() << "\n"
            << "maximal_totally_isotropic: " << (maxiso ? "true" : "false") << "\n";
  if (maxiso) std::cout << "type: " << to_string(type_of(c)) << "\n";
  return kOk;
}

int cmd_decompose(const std::string& path, bool json) {
  const LinearCode c = read_code(path);
  if (!is_max_totally_isotropic(c)) throw UsageError("decompose needs a maximal totally isotropic code");
  const Decomposition d = full_decomposition(c);
  if (json) {
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : d.factors[b].generators().rows()) rows.push_back(r.to_string());
      blocks.push_back({{"coordinates", d.blocks[b]}, {"generators", rows}});
    }
    std::cout << nlohmann::ordered_json{{"schema_version", kReportSchemaVersion}, {"n", d.n}, {"blocks", blocks}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "# " << describe(d) << "\n";
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    std::cout << "%\n# coordinates";
    for (auto i : d.blocks[b]) std::cout << ' ' << i;
    std::cout << "\n";
    write_code_record(std::cout, d.factors[b].generators());
  }
  return kOk;
}

int cmd_gen_selfdual(std::size_t n, const std::string& output, Exec exec) {
  if (n < 2 || n % 2 != 0 || n > 16) throw UsageError("--n must be even with 2 <= n <= 16");
  const SelfDualSet sd = generate_selfdual_reps(n, exec);
  std::ostringstream os;
  write_selfdual_set(os, sd);
  emit(os.str(), output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification and invariant checks for maximal totally isotropic binary codes"};
  app.require_subcommand(1);
  int jobs = 0;
  bool serial = false;
  app.add_option("--jobs,-j", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--serial", serial, "use the serial reference path");

  std::size_t n = 0;
  std::string source = "generate", format = "json", output, suite, range = "2..12", file;
  bool no_timing = false, json = false;

  auto* classify = app.add_subcommand("classify", "classify odd Lagrangians of length n");
  classify->add_option("--n", n, "even length")->required();
  classify->add_option("--selfdual", source, "'generate' or a self-dual database file");
  classify->add_option("--out", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  classify->add_option("--output,-o", output, "write here instead of stdout");
  classify->add_flag("--no-timing", no_timing, "omit timings so output is byte-identical across runs");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", range, "length or range a..b");

  auto* wen = app.add_subcommand("wenum", "weight enumerator of a code file");
  wen->add_option("file", file)->required();
  wen->add_flag("--json", json);

  auto* dec = app.add_subcommand("decompose", "indecomposable factors of a code file");
  dec->add_option("file", file)->required();
  dec->add_flag("--json", json);

  auto* dist = app.add_subcommand("distance", "minimum distance of a code file");
  dist->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen-selfdual", "write self-dual representatives of length n");
  gen->add_option("--n", n)->required();
  gen->add_option("--out,-o", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const Exec exec = exec_for(jobs, serial);
  try {
    if (*classify) return cmd_classify(n, source, format, output, exec, !no_timing);
    if (*verify) return cmd_verify(suite, range, exec);
    if (*wen) return cmd_wenum(file, json);
    if (*dec) return cmd_decompose(file, json);
    if (*dist) {
      std::cout << read_code(file).min_distance() << "\n";
      return kOk;
    }
    if (*gen) return cmd_gen_selfdual(n, output, exec);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerify;
  }
  return kUsage;
}
