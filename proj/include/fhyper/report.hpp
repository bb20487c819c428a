#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fhyper/numtheory.hpp"

namespace fhyper {

// One brute-force-versus-closed-formula comparison.
struct CountReport {
  std::string label;
  std::int64_t q = 0;
  std::int64_t lam = -1;  // element code of lambda / t, -1 when not applicable
  Rat brute;
  std::optional<Rat> formula;  // withheld on singular fibers
  bool equal = false;
  double elapsed_ms = 0;

  static CountReport make(std::string label, std::int64_t q, std::int64_t lam, Rat brute,
                          std::optional<Rat> formula, double elapsed_ms = 0);

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

enum class ReportFormat { Json, Csv, Text };

std::string rat_to_string(const Rat& value);
Rat rat_from_string(const std::string& text);

nlohmann::json report_to_json(const CountReport& report);
CountReport report_from_json(const nlohmann::json& j);

// Stable column order: label,q,lam,brute,formula,equal,elapsed_ms.
std::string report_serialize(const std::vector<CountReport>& reports, ReportFormat format);
std::vector<CountReport> report_parse(const std::string& text, ReportFormat format);

bool all_equal(const std::vector<CountReport>& reports);

}  // namespace fhyper
