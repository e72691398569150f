#pragma once

#include <string>

#include <json.hpp>

#include "bior/verify.hpp"

namespace bior {

// Round-trip-safe float text: 17 significant digits.
std::string float17(double v);

// Machine-readable record of a convergence run:
// { "schema_version": "1", "case": str, "params": obj,
//   "grid": {"start","stop","count"}, "entries": [{"param","sup_error"}],
//   "empirical_rate": number|null, "passed": bool }
// Rational parameters stay "p/q" strings; numeric parameters are emitted as
// JSON numbers.
nlohmann::ordered_json report_document(const ConvergenceReport& rep,
                                       const nlohmann::ordered_json& params,
                                       const GridSpec& grid);

// CSV twin of the document: header param,sup_error; one row per entry; a
// trailer row with the empirical rate (empty when undefined).
std::string report_csv(const ConvergenceReport& rep);

}  // namespace bior
