#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fhyper/hyper.hpp"
#include "fhyper/report.hpp"
#include "fhyper/variety.hpp"

namespace fhyper {

// (3;1,2), (3;1,1,1), (2,2;1,1,1,1), (4;2,1,1), (5;1,1,1,1,1)
std::vector<CyclotomicData> catalog();

// Prime powers 2 <= q <= n in increasing order.
std::vector<std::int64_t> prime_powers_upto(std::int64_t n);
// The characteristic divides none of the parameters.
bool admissible(const CyclotomicData& data, std::int64_t q);

// Builds F_q, going through the on-disk cache when a directory is given.
FieldTable obtain_field(std::int64_t q, const std::optional<std::filesystem::path>& cache_dir,
                        std::int64_t q_cap = kDefaultFieldCap);

struct SuiteOptions {
  std::vector<std::int64_t> fields;         // empty: the suite's default fields
  std::optional<std::int64_t> auto_bound;   // all admissible q up to this bound
  std::optional<CyclotomicData> data;       // empty: the whole catalog
  std::optional<std::vector<Elem>> lams;    // empty: every admissible value
  std::optional<AltVarietySpec> alt;        // empty: the Ono partition
  std::optional<std::filesystem::path> cache_dir;
  std::int64_t q_cap = kDefaultFieldCap;
  int jobs = 1;
};

const std::vector<std::string>& suite_names();

// Runs a named verification suite: main, hd, stickelberger, rewrite, ono,
// denominator, cells, alt. Throws ParseError for unknown names.
std::vector<CountReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace fhyper
