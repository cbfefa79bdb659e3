#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isocodes/classify.hpp"
#include "isocodes/selfdual.hpp"

namespace isocodes {

inline constexpr int kReportSchemaVersion = 1;

struct Timing {
  double selfdual_seconds = 0;
  double classify_seconds = 0;
};

struct ClassificationReport {
  std::size_t n = 0;
  TableRow row;
  std::size_t selfdual_count = 0;
  MassCheck selfdual_mass;
  MassCheck mass;  // sum 1/|Aut| over odd classes
  std::vector<CodeClass> classes;
  std::optional<Timing> timing;
  bool pass() const { return selfdual_mass.pass() && mass.pass(); }
};

ClassificationReport build_classification_report(const SelfDualSet& sd, Exec exec = {});

/// Pretty JSON, keys in a fixed order. Big integers and rationals are strings.
std::string to_json(const ClassificationReport& r);
/// "n,#I,#II,d_max,#max_I,#max_II"
std::string csv_header();
std::string csv_row(const TableRow& row);

}  // namespace isocodes
