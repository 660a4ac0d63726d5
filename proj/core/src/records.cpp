#include "powcom/records.hpp"

namespace powcom {

nlohmann::json to_json(const PropertyReport& report, bool include_timing) {
  nlohmann::json j;
  j["group"] = report.group;
  j["order"] = report.order;
  j["m"] = report.m;
  j["n"] = report.n;
  j["theorems_applicable"] = report.theorems_applicable;
  j["satisfies_p"] = report.satisfies_p;
  j["is_abelian"] = report.is_abelian;
  if (report.witness) {
    j["witness"] = {{"a", report.witness->a},
                    {"b", report.witness->b},
                    {"exponent", report.witness->exponent}};
  } else {
    j["witness"] = nullptr;
  }
  if (include_timing) j["wall_seconds"] = report.wall_seconds;
  return j;
}

nlohmann::json to_json(const ScanSummary& summary) {
  return {{"rows", summary.rows},
          {"p_and_abelian", summary.p_and_abelian},
          {"p_and_nonabelian", summary.p_and_nonabelian},
          {"not_p_and_abelian", summary.not_p_and_abelian},
          {"not_p_and_nonabelian", summary.not_p_and_nonabelian}};
}

nlohmann::json to_json(const ScanReport& report, bool include_timing) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) rows.push_back(to_json(row, include_timing));
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const auto& row : report.counterexamples) {
    counterexamples.push_back(to_json(row, include_timing));
  }
  return {{"rows", std::move(rows)},
          {"summary", to_json(report.summary)},
          {"counterexamples", std::move(counterexamples)}};
}

bool is_valid_property_record(const nlohmann::json& record) {
  if (!record.is_object()) return false;
  const bool fields = record.contains("group") && record["group"].is_string() &&
                      record.contains("order") && record["order"].is_number_unsigned() &&
                      record.contains("m") && record["m"].is_number_unsigned() &&
                      record.contains("n") && record["n"].is_number_unsigned() &&
                      record.contains("theorems_applicable") &&
                      record["theorems_applicable"].is_boolean() &&
                      record.contains("satisfies_p") && record["satisfies_p"].is_boolean() &&
                      record.contains("is_abelian") && record["is_abelian"].is_boolean() &&
                      record.contains("witness");
  if (!fields) return false;
  const auto& w = record["witness"];
  if (record["satisfies_p"].get<bool>()) return w.is_null();
  return w.is_object() && w.contains("a") && w["a"].is_number_unsigned() && w.contains("b") &&
         w["b"].is_number_unsigned() && w.contains("exponent") &&
         w["exponent"].is_number_unsigned();
}

}  // namespace powcom
