#include "fhyper/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "fhyper/errors.hpp"

namespace fhyper {

CountReport CountReport::make(std::string label, std::int64_t q, std::int64_t lam, Rat brute,
                              std::optional<Rat> formula, double elapsed_ms) {
  CountReport r;
  r.label = std::move(label);
  r.q = q;
  r.lam = lam;
  r.brute = std::move(brute);
  r.formula = std::move(formula);
  r.equal = r.formula.has_value() && *r.formula == r.brute;
  r.elapsed_ms = elapsed_ms;
  return r;
}

std::string rat_to_string(const Rat& raw) {
  Rat value = raw;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rat_from_string(const std::string& text) {
  try {
    Rat out(text);
    if (out.get_den() == 0) throw std::invalid_argument(text);
    out.canonicalize();
    return out;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "bad rational '" + text + "'");
  }
}

nlohmann::json report_to_json(const CountReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["q"] = r.q;
  j["lam"] = r.lam;
  j["brute"] = rat_to_string(r.brute);
  j["formula"] = r.formula ? nlohmann::ordered_json(rat_to_string(*r.formula))
                           : nlohmann::ordered_json(nullptr);
  j["equal"] = r.equal;
  j["elapsed_ms"] = r.elapsed_ms;
  return nlohmann::json::parse(j.dump());
}

CountReport report_from_json(const nlohmann::json& j) {
  try {
    CountReport r;
    r.label = j.at("label").get<std::string>();
    r.q = j.at("q").get<std::int64_t>();
    r.lam = j.at("lam").get<std::int64_t>();
    r.brute = rat_from_string(j.at("brute").get<std::string>());
    if (!j.at("formula").is_null()) r.formula = rat_from_string(j.at("formula").get<std::string>());
    r.equal = j.at("equal").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

namespace {

const char* kCsvHeader = "label,q,lam,brute,formula,equal,elapsed_ms";

std::string format_ms(double ms) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << ms;
  return out.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string report_serialize(const std::vector<CountReport>& reports, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["label"] = r.label;
        j["q"] = r.q;
        j["lam"] = r.lam;
        j["brute"] = rat_to_string(r.brute);
        j["formula"] = r.formula ? nlohmann::ordered_json(rat_to_string(*r.formula))
                                 : nlohmann::ordered_json(nullptr);
        j["equal"] = r.equal;
        j["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv:
      out << kCsvHeader << "\n";
      for (const auto& r : reports) {
        out << csv_quote(r.label) << "," << r.q << "," << r.lam << "," << rat_to_string(r.brute)
            << "," << (r.formula ? rat_to_string(*r.formula) : "") << ","
            << (r.equal ? "true" : "false") << "," << format_ms(r.elapsed_ms) << "\n";
      }
      break;
    case ReportFormat::Text:
      for (const auto& r : reports) {
        out << (r.equal ? "ok   " : "FAIL ") << r.label << "  q=" << r.q;
        if (r.lam >= 0) out << " lam=" << r.lam;
        out << "  brute=" << rat_to_string(r.brute)
            << "  formula=" << (r.formula ? rat_to_string(*r.formula) : "(withheld)") << "\n";
      }
      break;
  }
  return out.str();
}

std::vector<CountReport> report_parse(const std::string& text, ReportFormat format) {
  std::vector<CountReport> out;
  if (format == ReportFormat::Json) {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    for (const auto& j : arr) out.push_back(report_from_json(j));
    return out;
  }
  if (format != ReportFormat::Csv) throw Error(ErrorKind::ParseError, "text reports are not parseable");
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorKind::ParseError, "missing CSV header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cols = csv_split(line);
    if (cols.size() != 7) throw Error(ErrorKind::ParseError, "expected 7 columns");
    if (cols[5] != "true" && cols[5] != "false") {
      throw Error(ErrorKind::ParseError, "bad boolean '" + cols[5] + "'");
    }
    CountReport r;
    r.label = cols[0];
    try {
      std::size_t used = 0;
      r.q = std::stoll(cols[1], &used);
      if (used != cols[1].size()) throw std::invalid_argument(cols[1]);
      r.lam = std::stoll(cols[2], &used);
      if (used != cols[2].size()) throw std::invalid_argument(cols[2]);
      r.elapsed_ms = std::stod(cols[6], &used);
      if (used != cols[6].size()) throw std::invalid_argument(cols[6]);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad numeric column in '" + line + "'");
    }
    r.brute = rat_from_string(cols[3]);
    if (!cols[4].empty()) r.formula = rat_from_string(cols[4]);
    r.equal = cols[5] == "true";
    out.push_back(std::move(r));
  }
  return out;
}

bool all_equal(const std::vector<CountReport>& reports) {
  for (const auto& r : reports) {
    if (!r.equal) return false;
  }
  return true;
}

}  // namespace fhyper
