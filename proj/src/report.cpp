#include "bior/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace bior {

std::string float17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// "16" -> integer, "0.2" -> number, "9/10" -> string.
nlohmann::ordered_json param_json(const std::string& text) {
  if (text.empty()) return text;
  char* end = nullptr;
  const long long asint = std::strtoll(text.c_str(), &end, 10);
  if (end && *end == '\0') return asint;
  const double asdouble = std::strtod(text.c_str(), &end);
  if (end && *end == '\0') return asdouble;
  return text;
}

}  // namespace

nlohmann::ordered_json report_document(const ConvergenceReport& rep,
                                       const nlohmann::ordered_json& params,
                                       const GridSpec& grid) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["case"] = rep.case_id;
  doc["params"] = params;
  doc["grid"] = {{"start", to_double(grid.start)},
                 {"stop", to_double(grid.stop)},
                 {"count", grid.count}};
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"param", param_json(e.param)}, {"sup_error", e.sup_error}});
  doc["entries"] = entries;
  if (rep.empirical_rate)
    doc["empirical_rate"] = *rep.empirical_rate;
  else
    doc["empirical_rate"] = nullptr;
  doc["passed"] = rep.passed;
  return doc;
}

std::string report_csv(const ConvergenceReport& rep) {
  std::string out = "param,sup_error\n";
  for (const auto& e : rep.entries) out += e.param + "," + float17(e.sup_error) + "\n";
  out += "empirical_rate,";
  if (rep.empirical_rate) out += float17(*rep.empirical_rate);
  out += "\n";
  return out;
}

}  // namespace bior
