#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bergtop/carleson.hpp"
#include "bergtop/symbols.hpp"
#include "bergtop/types.hpp"

namespace bergtop::io {

using nlohmann::json;

// Complex numbers travel as [re, im] pairs throughout the schema.
Complex parse_complex(const json& v, const std::string& path);
json complex_to_json(Complex z);

AnalyticPoly parse_poly(const json& v, const std::string& path);
json poly_to_json(const AnalyticPoly& f);

/// Symbol schema: {"type": "bounded_radial"|"discrete"|"circle"|
/// "deriv_delta"|"spectral"|"finite_rank", ...}. Validation failures carry
/// the JSON path of the offending field.
Symbol parse_symbol(const json& v);
json symbol_to_json(const Symbol& s);

/// Matrix schema: {"dim": N, "entries": row-major [re, im] pairs}.
Mat parse_matrix(const json& v);
json matrix_to_json(const Mat& m);

/// Collection schema: {"entries": [{"l":., "j":., "measure": <symbol>}]}.
MeasureCollection parse_collection(const json& v);

json to_json(const KCarlesonReport& r);
json to_json(const SeriesReport& r);
json to_json(const DecayReport& r);
json to_json(const FormBoundReport& r);

/// 17 significant digits, scientific: enough to make regression diffs
/// meaningful (round-trips doubles exactly).
std::string format_sci(double x);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::vector<std::string>& new_row() {
    rows.emplace_back(columns.size());
    return rows.back();
  }
};

std::string to_csv(const Table& t);
json to_json(const Table& t);

json load_json_file(const std::string& path);

}  // namespace bergtop::io
