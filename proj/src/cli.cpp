#include "fhyper/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fhyper/errors.hpp"
#include "fhyper/hyper.hpp"
#include "fhyper/parallel.hpp"
#include "fhyper/report.hpp"
#include "fhyper/suites.hpp"
#include "fhyper/toric.hpp"
#include "fhyper/variety.hpp"

namespace fhyper::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string p_list;
  std::string q_list;
  std::string alpha;
  std::string beta;
  std::string params;
  std::string fields;
  std::int64_t auto_bound = 0;
  std::string lams = "all";
  std::string format = "text";
  std::string cache_dir;
  int jobs = 0;
  std::int64_t q_cap = kDefaultFieldCap;
  bool general = false;
  bool timing = false;

  std::string suite;
  std::string what = "torus";
  std::string cell;
  std::string curve = "legendre";
  std::string a_list;
  std::string blocks;
  std::string table_kind;
  int r = 0;
  int s = 0;
  std::string cache_action;
};

// Parameter set given on the command line: the over-Q datum when one exists,
// and the hypergeometric parameters always.
struct ParamChoice {
  std::optional<CyclotomicData> data;
  std::optional<HGParams> params;
};

ParamChoice resolve_params(const Options& o) {
  const bool cyclo = !o.p_list.empty() || !o.q_list.empty();
  const bool frac = !o.alpha.empty() || !o.beta.empty();
  const int given = int(cyclo) + int(frac) + int(!o.params.empty());
  if (given > 1) {
    throw Error(ErrorKind::ParseError, "give exactly one of --p/--q, --alpha/--beta, --params");
  }
  ParamChoice out;
  if (cyclo) {
    if (o.p_list.empty() || o.q_list.empty()) {
      throw Error(ErrorKind::ParseError, "--p and --q must be given together");
    }
    out.data = params_from_cyclotomic(parse_int_list(o.p_list), parse_int_list(o.q_list));
    out.params = out.data->params;
  } else if (frac) {
    if (o.alpha.empty() || o.beta.empty()) {
      throw Error(ErrorKind::ParseError, "--alpha and --beta must be given together");
    }
    out.params = HGParams::make(parse_frac_list(o.alpha), parse_frac_list(o.beta));
    try {
      out.data = cyclotomic_from_params(*out.params);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotDefinedOverQ) throw;
    }
  } else if (!o.params.empty()) {
    auto spec = parse_param_spec(o.params);
    out.params = spec.params;
    out.data = spec.over_q;
  }
  return out;
}

std::optional<std::vector<Elem>> resolve_lams(const Options& o) {
  if (o.lams == "all") return std::nullopt;
  std::vector<Elem> out;
  for (auto v : parse_int_list(o.lams)) {
    if (v < 0) throw Error(ErrorKind::ParseError, "element codes are nonnegative");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

std::vector<std::int64_t> explicit_fields(const Options& o) {
  if (o.fields.empty()) return {};
  return parse_int_list(o.fields);
}

ReportFormat resolve_format(const Options& o) {
  if (o.format == "json") return ReportFormat::Json;
  if (o.format == "csv") return ReportFormat::Csv;
  if (o.format == "text") return ReportFormat::Text;
  throw Error(ErrorKind::ParseError, "unknown format '" + o.format + "'");
}

std::optional<fs::path> resolve_cache(const Options& o) {
  if (!o.cache_dir.empty()) return fs::path(o.cache_dir);
  if (const char* env = std::getenv("HQ_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

fs::path cache_dir_for_cache_command(const Options& o) {
  if (auto dir = resolve_cache(o)) return *dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "fhyper";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "fhyper";
  }
  return fs::path(".hq_cache");
}

int resolve_jobs(const Options& o) {
  if (o.jobs > 0) return o.jobs;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void require_fields(const std::vector<std::int64_t>& fields) {
  if (fields.empty()) throw Error(ErrorKind::ParseError, "no fields selected (use --field or --auto)");
}

std::vector<Elem> element_sweep(const std::optional<std::vector<Elem>>& lams, std::int64_t q) {
  std::vector<Elem> out;
  if (lams) {
    for (Elem v : *lams) {
      if (v == 0 || v >= static_cast<Elem>(q)) {
        throw Error(ErrorKind::BadParameter, "element code " + std::to_string(v) +
                                                 " is not a nonzero element of F_" +
                                                 std::to_string(q));
      }
      out.push_back(v);
    }
  } else {
    for (Elem v = 1; v < static_cast<Elem>(q); ++v) out.push_back(v);
  }
  return out;
}

void finish_reports(std::vector<CountReport>& reports, const Options& o) {
  if (!o.timing) {
    for (auto& r : reports) r.elapsed_ms = 0;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// A table of string cells rendered as CSV, JSON (array of objects) or text.
std::string render_rows(const std::vector<std::string>& columns,
                        const std::vector<std::vector<std::string>>& rows, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Csv:
      for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
        out << "\n";
      }
      break;
    case ReportFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json j;
        for (std::size_t c = 0; c < columns.size(); ++c) j[columns[c]] = row[c];
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::Text:
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? "  " : "") << columns[c] << "=" << row[c];
        }
        out << "\n";
      }
      break;
  }
  return out.str();
}

// ---- hq ------------------------------------------------------------------

int cmd_hq(const Options& o, std::ostream& out) {
  const auto choice = resolve_params(o);
  if (!choice.params) throw Error(ErrorKind::ParseError, "no parameters given");
  const auto& params = *choice.params;
  if (!o.general && !choice.data) {
    throw Error(ErrorKind::NotDefinedOverQ,
                params.to_string() + " is not defined over Q; pass --general to evaluate H_q "
                                     "from the Gauss-sum definition");
  }
  std::vector<std::int64_t> fields = explicit_fields(o);
  if (fields.empty() && o.auto_bound > 0) {
    for (auto q : prime_powers_upto(o.auto_bound)) {
      const bool ok = o.general ? params.fits_field(q - 1) : admissible(*choice.data, q);
      if (ok) fields.push_back(q);
    }
  }
  require_fields(fields);
  for (auto q : fields) {
    if (!prime_power_decomposition(q)) {
      throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    if (o.general && !params.fits_field(q - 1)) {
      throw Error(ErrorKind::BadFieldForParams,
                  "(q-1) alpha, (q-1) beta are not integral for q = " + std::to_string(q));
    }
    if (!o.general) require_coprime_characteristic(*choice.data, prime_power_decomposition(q)->first);
  }
  const auto lams = resolve_lams(o);
  const auto cache = resolve_cache(o);
  const int jobs = resolve_jobs(o);
  auto blocks = parallel_map<std::vector<std::vector<std::string>>>(
      fields.size(), jobs, [&](std::size_t i) {
        const std::int64_t q = fields[i];
        GaussTable table(obtain_field(q, cache, o.q_cap));
        std::vector<std::vector<std::string>> rows;
        if (o.general) {
          GeneralSum sum(table, params);
          for (Elem t : element_sweep(lams, q)) {
            const CycloNum h = sum.h(t).reduced();
            const auto value = h.as_rational();
            const std::string text = value ? rat_to_string(*value) : h.to_json().dump();
            const std::string val =
                value ? (p_valuation(*value, table.p()) >= kInfiniteValuation
                             ? "inf"
                             : std::to_string(p_valuation(*value, table.p())))
                      : "";
            rows.push_back({std::to_string(q), std::to_string(t), text,
                            std::string(to_string(Provenance::GeneralDefinition)), val});
          }
        } else {
          OverQSum sum(table, *choice.data);
          for (Elem t : element_sweep(lams, q)) {
            const HValue h = sum.at(t);
            rows.push_back({std::to_string(q), std::to_string(t), rat_to_string(h.value),
                            std::string(to_string(h.provenance)),
                            h.p_valuation >= kInfiniteValuation ? "inf"
                                                                : std::to_string(h.p_valuation)});
          }
        }
        return rows;
      });
  std::vector<std::vector<std::string>> rows;
  for (auto& b : blocks) {
    for (auto& r : b) rows.push_back(std::move(r));
  }
  out << render_rows({"q", "t", "value", "provenance", "p_valuation"}, rows, resolve_format(o));
  return kExitOk;
}

// ---- count ---------------------------------------------------------------

Cell parse_cell(const std::string& text, int r, int s) {
  static const std::regex number("-?[0-9]+");
  std::vector<int> values;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number);
       it != std::sregex_iterator(); ++it) {
    values.push_back(std::stoi(it->str()));
  }
  if (values.size() % 2) throw Error(ErrorKind::ParseError, "cell needs index pairs");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 0; k < values.size(); k += 2) pairs.emplace_back(values[k], values[k + 1]);
  return Cell::make(r, s, std::move(pairs));
}

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream in(text);
  std::string block;
  while (std::getline(in, block, ';')) {
    std::vector<int> b;
    for (auto v : parse_int_list(block)) b.push_back(static_cast<int>(v));
    out.push_back(std::move(b));
  }
  return out;
}

std::optional<AltVarietySpec> resolve_alt(const Options& o) {
  if (o.a_list.empty() && o.blocks.empty()) return std::nullopt;
  if (o.a_list.empty() || o.blocks.empty()) {
    throw Error(ErrorKind::ParseError, "--a and --blocks must be given together");
  }
  return AltVarietySpec::make(parse_int_list(o.a_list), parse_blocks(o.blocks));
}

std::vector<std::int64_t> count_fields(const Options& o) {
  auto fields = explicit_fields(o);
  if (fields.empty() && o.auto_bound > 0) fields = prime_powers_upto(o.auto_bound);
  require_fields(fields);
  return fields;
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto fields = count_fields(o);
  const auto lams = resolve_lams(o);
  const auto cache = resolve_cache(o);
  const int jobs = resolve_jobs(o);
  const std::string what = o.what;
  std::optional<CyclotomicData> data;
  if (what == "torus" || what == "component" || what == "completed") {
    data = resolve_params(o).data;
    if (!data) throw Error(ErrorKind::ParseError, "counting V_lambda needs an over-Q datum");
  } else if (what != "curve" && what != "alt") {
    throw Error(ErrorKind::ParseError, "unknown count target '" + what + "'");
  }
  const auto alt = resolve_alt(o);
  auto blocks = parallel_map<std::vector<CountReport>>(fields.size(), jobs, [&](std::size_t i) {
    const std::int64_t q = fields[i];
    GaussTable table(obtain_field(q, cache, o.q_cap));
    std::vector<CountReport> reports;
    auto add = [&](std::string label, Elem lam, Int brute, double ms) {
      reports.push_back(CountReport::make(std::move(label), q, lam, Rat(brute), std::nullopt, ms));
    };
    if (data) {
      VarietyCounter counter(table, *data);
      std::optional<Cell> cell;
      if (what == "component") cell = parse_cell(o.cell, data->r(), data->s());
      for (Elem lam : element_sweep(lams, q)) {
        const auto start = std::chrono::steady_clock::now();
        Int brute;
        std::string label;
        if (what == "torus") {
          brute = counter.torus_brute(lam);
          label = "torus " + data->to_string();
        } else if (what == "component") {
          brute = counter.component_brute(*cell, lam);
          label = "component " + cell->to_string() + " " + data->to_string();
        } else {
          brute = counter.torus_brute(lam);
          for (const auto& c : counter.cells()) {
            if (!c.empty() && !c.maximal()) brute += counter.component_brute(c, lam);
          }
          label = "completed " + data->to_string();
        }
        add(label, lam, brute,
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count());
      }
    } else if (what == "curve") {
      CurveCounter counter(table, curve_kind_from_string(o.curve));
      for (Elem v : element_sweep(lams, q)) {
        if (!counter.admissible(v)) {
          if (lams) throw Error(ErrorKind::BadParameter, "excluded parameter " + std::to_string(v));
          continue;
        }
        add(o.curve, v, counter.brute(v), 0);
      }
    } else {
      AltVarietyCounter counter(table, alt ? *alt : AltVarietySpec::ono());
      for (Elem lam : element_sweep(lams, q)) {
        add("alt " + counter.spec().to_string(), lam, counter.brute(lam), 0);
      }
    }
    return reports;
  });
  std::vector<CountReport> reports;
  for (auto& b : blocks) {
    for (auto& r : b) reports.push_back(std::move(r));
  }
  finish_reports(reports, o);
  out << report_serialize(reports, resolve_format(o));
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.fields = explicit_fields(o);
  if (o.auto_bound > 0) options.auto_bound = o.auto_bound;
  const auto choice = resolve_params(o);
  if (choice.params && !choice.data) {
    throw Error(ErrorKind::NotDefinedOverQ, choice.params->to_string() +
                                                " is not defined over Q");
  }
  options.data = choice.data;
  options.lams = resolve_lams(o);
  options.alt = resolve_alt(o);
  options.cache_dir = resolve_cache(o);
  options.q_cap = o.q_cap;
  options.jobs = resolve_jobs(o);
  auto reports = run_suite(o.suite, options);
  finish_reports(reports, o);
  out << report_serialize(reports, resolve_format(o));
  std::vector<CountReport> failed;
  for (const auto& r : reports) {
    if (!r.equal) failed.push_back(r);
  }
  if (!failed.empty()) {
    err << failed.size() << " of " << reports.size() << " checks failed:\n"
        << report_serialize(failed, ReportFormat::Text);
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---- table ---------------------------------------------------------------

std::string polynomial_text(const std::vector<Int>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = coeffs[k] == 1 && k > 0;
    if (!unit) out += coeffs[k].get_str();
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto choice = resolve_params(o);
  int r = o.r;
  int s = o.s;
  if (choice.data) {
    r = choice.data->r();
    s = choice.data->s();
  }
  if (r < 1 || s < 1) throw Error(ErrorKind::ParseError, "give --r and --s (or --p/--q)");
  const auto format = resolve_format(o);
  std::vector<std::vector<std::string>> rows;
  if (o.table_kind == "prs") {
    const auto coeffs = p_rs(r, s);
    const std::string poly = polynomial_text(coeffs);
    const auto fields = explicit_fields(o);
    if (fields.empty()) rows.push_back({std::to_string(r), std::to_string(s), poly, "", ""});
    for (auto q : fields) {
      rows.push_back({std::to_string(r), std::to_string(s), poly, std::to_string(q),
                      p_rs(r, s, Int(static_cast<long>(q))).get_str()});
    }
    out << render_rows({"r", "s", "polynomial", "q", "value"}, rows, format);
    return kExitOk;
  }
  if (o.table_kind == "cells") {
    for (const auto& c : enumerate_cells(r, s)) {
      std::string a_s;
      if (choice.data) a_s = std::to_string(cell_gcd(*choice.data, c));
      rows.push_back({c.to_string(), std::to_string(c.length()), std::to_string(c.support_size()),
                      c.maximal() ? "true" : "false", a_s});
    }
    out << render_rows({"cell", "l", "support", "maximal", "a_S"}, rows, format);
    return kExitOk;
  }
  throw Error(ErrorKind::ParseError, "unknown table '" + o.table_kind + "'");
}

// ---- cache ---------------------------------------------------------------

int cmd_cache(const Options& o, std::ostream& out) {
  const fs::path dir = cache_dir_for_cache_command(o);
  if (o.cache_action == "build") {
    auto fields = explicit_fields(o);
    if (fields.empty() && o.auto_bound > 0) fields = prime_powers_upto(o.auto_bound);
    require_fields(fields);
    auto paths = parallel_map<std::string>(fields.size(), resolve_jobs(o), [&](std::size_t i) {
      FieldTable::cached(dir, fields[i], o.q_cap);
      return FieldTable::cache_file(dir, fields[i]).string();
    });
    for (const auto& p : paths) out << p << "\n";
    return kExitOk;
  }
  if (o.cache_action == "list" || o.cache_action == "clear") {
    std::vector<fs::path> files;
    if (fs::exists(dir)) {
      static const std::regex pattern("field_[0-9]+\\.hqft");
      for (const auto& entry : fs::directory_iterator(dir)) {
        if (std::regex_match(entry.path().filename().string(), pattern)) files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      if (o.cache_action == "clear") fs::remove(f);
      out << (o.cache_action == "clear" ? "removed " : "") << f.string() << "\n";
    }
    return kExitOk;
  }
  throw Error(ErrorKind::ParseError, "unknown cache action '" + o.cache_action + "'");
}

void add_param_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p_list, "numerator exponents p_1,...,p_r");
  cmd->add_option("--q", o.q_list, "denominator exponents q_1,...,q_s");
  cmd->add_option("--alpha", o.alpha, "alpha parameters, e.g. 1/3,2/3");
  cmd->add_option("--beta", o.beta, "beta parameters, e.g. 1,1");
  cmd->add_option("--params", o.params, "parameter string, e.g. \"p=3 q=1,1,1\"");
}

void add_field_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--field", o.fields, "comma-separated field sizes q");
  cmd->add_option("--auto", o.auto_bound, "all admissible prime powers up to N");
  cmd->add_option("--cache-dir", o.cache_dir, "field-table cache directory (overrides HQ_CACHE_DIR)");
  cmd->add_option("--q-cap", o.q_cap, "largest field size allowed");
  cmd->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_flag("--timing", o.timing, "record elapsed_ms (otherwise 0 for reproducible output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite hypergeometric sums and point counts over finite fields", "fhyper"};
  app.require_subcommand(1);

  auto* hq = app.add_subcommand("hq", "evaluate H_q over a sweep of t");
  add_param_options(hq, o);
  add_field_options(hq, o);
  add_output_options(hq, o);
  hq->add_option("--t,--lam", o.lams, "\"all\" or comma-separated element codes");
  hq->add_flag("--general", o.general, "use the Gauss-sum definition instead of the over-Q form");

  auto* count = app.add_subcommand("count", "brute-force point counts only");
  add_param_options(count, o);
  add_field_options(count, o);
  add_output_options(count, o);
  count->add_option("--t,--lam", o.lams, "\"all\" or comma-separated element codes");
  count->add_option("--what", o.what, "torus, component, completed, curve or alt")
      ->check(CLI::IsMember({"torus", "component", "completed", "curve", "alt"}));
  count->add_option("--cell", o.cell, "cell for --what component, e.g. \"(1,1),(2,1)\"");
  count->add_option("--curve", o.curve, "cubic_roots, katz_curve or legendre");
  count->add_option("--a", o.a_list, "exponents of the alternative variety");
  count->add_option("--blocks", o.blocks, "1-based blocks, e.g. \"1,2,3;4,5,6\"");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  add_param_options(verify, o);
  add_field_options(verify, o);
  add_output_options(verify, o);
  verify->add_option("--t,--lam", o.lams, "\"all\" or comma-separated element codes");
  verify->add_option("--a", o.a_list, "exponents of the alternative variety");
  verify->add_option("--blocks", o.blocks, "1-based blocks, e.g. \"1,2,3;4,5,6\"");

  auto* table = app.add_subcommand("table", "P_rs polynomials and cell listings");
  table->add_option("kind", o.table_kind, "prs or cells")->required()->check(CLI::IsMember({"prs", "cells"}));
  add_param_options(table, o);
  table->add_option("--r", o.r, "number of numerator exponents");
  table->add_option("--s", o.s, "number of denominator exponents");
  table->add_option("--field", o.fields, "evaluate P_rs at these q");
  add_output_options(table, o);

  auto* cache = app.add_subcommand("cache", "build, list or clear cached field tables");
  cache->add_option("action", o.cache_action, "build, list or clear")
      ->required()
      ->check(CLI::IsMember({"build", "list", "clear"}));
  add_field_options(cache, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  try {
    int code = kExitOk;
    if (*hq) code = cmd_hq(o, buffer);
    else if (*count) code = cmd_count(o, buffer);
    else if (*verify) code = cmd_verify(o, buffer, err);
    else if (*table) code = cmd_table(o, buffer);
    else if (*cache) code = cmd_cache(o, buffer);
    out << buffer.str();
    out.flush();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NotRational ? kExitVerificationFailed : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace fhyper::cli
