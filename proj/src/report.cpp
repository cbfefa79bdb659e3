#include "isocodes/report.hpp"

#include <json.hpp>
#include <sstream>

#include "isocodes/weight_enum.hpp"

namespace isocodes {

namespace {

using Json = nlohmann::ordered_json;

Json mass_json(const MassCheck& m) {
  return Json{{"lhs", to_fraction_string(m.lhs)}, {"rhs", to_fraction_string(m.rhs)}, {"pass", m.pass()}};
}

}  // namespace

ClassificationReport build_classification_report(const SelfDualSet& sd, Exec exec) {
  ClassificationReport r;
  r.n = sd.n;
  r.selfdual_count = sd.reps.size();
  r.selfdual_mass = selfdual_mass(sd);
  r.classes = classify_odd_lagrangians(sd, exec);
  r.mass = verify_odd_mass(r.classes, sd.n);
  r.row = table_row(r.classes, sd.n);
  return r;
}

std::string to_json(const ClassificationReport& r) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = r.n;
  j["table_row"] = Json{{"n", r.row.n},
                        {"count_typeI", r.row.count_typeI},
                        {"count_typeII", r.row.count_typeII},
                        {"d_max", r.row.d_max},
                        {"count_max_typeI", r.row.count_max_typeI},
                        {"count_max_typeII", r.row.count_max_typeII}};
  j["selfdual"] = Json{{"count", r.selfdual_count}, {"mass_check", mass_json(r.selfdual_mass)}};
  j["mass_check"] = mass_json(r.mass);
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json rows = Json::array();
    for (const auto& row : c.rep.generators().rows()) rows.push_back(row.to_string());
    classes.push_back(Json{{"generators", rows},
                           {"aut_order", c.aut_order.str()},
                           {"type", to_string(c.type)},
                           {"min_distance", c.min_distance},
                           {"weight_distribution", c.weights},
                           {"weight_enumerator", WeightEnumerator::from_distribution(c.weights).to_string()},
                           {"selfdual_parent", c.parent}});
  }
  j["classes"] = classes;
  if (r.timing) {
    j["timing"] = Json{{"selfdual_seconds", r.timing->selfdual_seconds}, {"classify_seconds", r.timing->classify_seconds}};
  }
  return j.dump(2) + "\n";
}

std::string csv_header() { return "n,#I,#II,d_max,#max_I,#max_II"; }

std::string csv_row(const TableRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.count_typeI << ',' << row.count_typeII << ',' << row.d_max << ',' << row.count_max_typeI
     << ',' << row.count_max_typeII;
  return os.str();
}

}  // namespace isocodes
