#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "extremis/constructions.hpp"
#include "extremis/verify.hpp"

namespace extremis {

using Json = nlohmann::ordered_json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
inline Json count_to_json(Count c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

inline Json forms_to_json(const std::vector<CanonicalForm>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(f.graph6());
  return out;
}

/// elapsed_ms is written only when `with_timing`; everything else is a pure
/// function of the scanned graphs.
inline Json to_json(const VerificationReport& r, bool with_timing = false) {
  Json j;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["predicted"] = count_to_json(r.predicted);
  j["observed_max"] = count_to_json(r.observed_max);
  j["extremal_forms"] = forms_to_json(r.extremal_forms);
  j["expected_forms"] = forms_to_json(r.expected_forms);
  j["pass"] = r.pass;
  j["graphs_examined"] = r.graphs_examined;
  if (with_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

inline Json to_json(Theorem theorem, int n, const std::vector<VerificationReport>& reports, bool with_timing = false) {
  Json j;
  j["check"] = theorem_name(theorem);
  j["n"] = n;
  bool pass = !reports.empty();
  Json list = Json::array();
  for (const auto& r : reports) {
    list.push_back(to_json(r, with_timing));
    pass = pass && r.pass;
  }
  j["reports"] = std::move(list);
  j["pass"] = pass;
  return j;
}

inline Json to_json(const Lemma3Result& r) {
  Json j;
  j["check"] = "lemma3";
  j["n"] = r.n;
  j["graphs_examined"] = r.graphs_examined;
  j["graphs_applicable"] = r.graphs_applicable;
  j["equality_cases"] = r.equality_cases;
  Json list = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    e["graph6"] = v.graph6;
    e["alpha"] = v.alpha;
    e["num_mis"] = count_to_json(v.num_mis);
    e["bound"] = count_to_json(v.bound);
    e["reason"] = v.reason;
    list.push_back(std::move(e));
  }
  j["violations"] = std::move(list);
  j["pass"] = r.pass();
  return j;
}

inline constexpr const char* kCsvHeader = "n,alpha,g,f,family_size,observed_max,pass";

/// Family sizes are listed up to this order; beyond it the column is blank.
inline constexpr int kTableFamilyMaxOrder = 16;

struct TableRow {
  int n = 0;
  int alpha = 0;
  Count g = 0;
  Count f = 0;
  std::optional<std::size_t> family_size;
  std::optional<Count> observed_max;
  std::optional<bool> pass;
};

inline std::vector<TableRow> formula_table(int max_n) {
  if (max_n < 1 || max_n > kMaxOrder) throw ConstructionError("table order must lie in 1.." + std::to_string(kMaxOrder));
  std::vector<TableRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    for (int a = 1; a < n; ++a) {
      TableRow row{n, a, g_formula(n, a), f_formula(n, a), std::nullopt, std::nullopt, std::nullopt};
      if (n <= kTableFamilyMaxOrder) row.family_size = enumerate_family(n, a).size();
      rows.push_back(row);
    }
  }
  return rows;
}

inline std::vector<TableRow> report_rows(const std::vector<VerificationReport>& reports) {
  std::vector<TableRow> rows;
  for (const auto& r : reports)
    rows.push_back({r.n, r.alpha, g_formula(r.n, r.alpha), f_formula(r.n, r.alpha), r.expected_forms.size(),
                    r.observed_max, r.pass});
  return rows;
}

inline std::string to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.alpha << ',' << to_string(r.g) << ',' << to_string(r.f) << ',';
    if (r.family_size) out << *r.family_size;
    out << ',';
    if (r.observed_max) out << to_string(*r.observed_max);
    out << ',';
    if (r.pass) out << (*r.pass ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

inline Json to_json(const std::vector<TableRow>& rows) {
  Json list = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["n"] = r.n;
    j["alpha"] = r.alpha;
    j["g"] = count_to_json(r.g);
    j["f"] = count_to_json(r.f);
    j["family_size"] = r.family_size ? Json(*r.family_size) : Json(nullptr);
    j["observed_max"] = r.observed_max ? count_to_json(*r.observed_max) : Json(nullptr);
    j["pass"] = r.pass ? Json(*r.pass) : Json(nullptr);
    list.push_back(std::move(j));
  }
  Json doc;
  doc["rows"] = std::move(list);
  return doc;
}

enum class TableFormat { Csv, Json };

/// Formula table for 1 <= alpha < n <= max_n.
inline std::string emit_table(int max_n, TableFormat format) {
  const auto rows = formula_table(max_n);
  if (format == TableFormat::Csv) return to_csv(rows);
  return to_json(rows).dump(2) + "\n";
}

inline std::string emit_table(int max_n, std::string_view format) {
  if (format == "csv") return emit_table(max_n, TableFormat::Csv);
  if (format == "json") return emit_table(max_n, TableFormat::Json);
  throw std::invalid_argument("unsupported table format '" + std::string(format) + "'");
}

}  // namespace extremis
