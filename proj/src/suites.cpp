#include "fhyper/suites.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "fhyper/errors.hpp"
#include "fhyper/parallel.hpp"
#include "fhyper/toric.hpp"

namespace fhyper {

std::vector<CyclotomicData> catalog() {
  return {params_from_cyclotomic({3}, {1, 2}), params_from_cyclotomic({3}, {1, 1, 1}),
          params_from_cyclotomic({2, 2}, {1, 1, 1, 1}), params_from_cyclotomic({4}, {2, 1, 1}),
          params_from_cyclotomic({5}, {1, 1, 1, 1, 1})};
}

std::vector<std::int64_t> prime_powers_upto(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q <= n; ++q) {
    if (prime_power_decomposition(q)) out.push_back(q);
  }
  return out;
}

bool admissible(const CyclotomicData& data, std::int64_t q) {
  const auto pf = prime_power_decomposition(q);
  if (!pf) return false;
  for (auto v : data.all_parameters()) {
    if (v % pf->first == 0) return false;
  }
  return true;
}

FieldTable obtain_field(std::int64_t q, const std::optional<std::filesystem::path>& cache_dir,
                        std::int64_t q_cap) {
  if (cache_dir) return FieldTable::cached(*cache_dir, q, q_cap);
  return FieldTable::build(q, q_cap);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"main", "hd",   "stickelberger", "rewrite",
                                                 "ono",  "denominator", "cells",  "alt"};
  return names;
}

namespace {

using Job = std::function<std::vector<CountReport>()>;

std::vector<CountReport> run_jobs(const std::vector<Job>& jobs, int threads) {
  auto parts = parallel_map<std::vector<CountReport>>(
      jobs.size(), threads, [&](std::size_t i) { return jobs[i](); });
  std::vector<CountReport> out;
  for (auto& part : parts) {
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

// Gauss tables shared by all jobs of one suite run, built in parallel.
class TablePool {
 public:
  TablePool(const std::set<std::int64_t>& qs, const SuiteOptions& options) {
    const std::vector<std::int64_t> list(qs.begin(), qs.end());
    auto tables = parallel_map<std::shared_ptr<GaussTable>>(
        list.size(), options.jobs, [&](std::size_t i) {
          return std::make_shared<GaussTable>(
              obtain_field(list[i], options.cache_dir, options.q_cap));
        });
    for (std::size_t i = 0; i < list.size(); ++i) tables_[list[i]] = tables[i];
  }
  const GaussTable& at(std::int64_t q) const { return *tables_.at(q); }

 private:
  std::map<std::int64_t, std::shared_ptr<GaussTable>> tables_;
};

std::vector<Elem> sweep(const SuiteOptions& options, std::int64_t q) {
  std::vector<Elem> out;
  if (options.lams) {
    for (Elem v : *options.lams) {
      if (v == 0 || v >= static_cast<Elem>(q)) {
        throw Error(ErrorKind::BadParameter, "element code " + std::to_string(v) +
                                                 " is not a nonzero element of F_" +
                                                 std::to_string(q));
      }
      out.push_back(v);
    }
    return out;
  }
  for (Elem v = 1; v < static_cast<Elem>(q); ++v) out.push_back(v);
  return out;
}

std::vector<CyclotomicData> data_list(const SuiteOptions& options) {
  if (options.data) return {*options.data};
  return catalog();
}

// Explicit fields if given, otherwise the admissible prime powers up to the
// automatic bound, otherwise the suite default.
std::vector<std::int64_t> field_list(const SuiteOptions& options,
                                     const std::vector<std::int64_t>& fallback) {
  if (!options.fields.empty()) {
    for (auto q : options.fields) {
      if (!prime_power_decomposition(q)) {
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
      }
    }
    return options.fields;
  }
  if (options.auto_bound) return prime_powers_upto(*options.auto_bound);
  return fallback;
}

// Fields for one datum: explicit lists must be admissible when the datum was
// requested explicitly; catalog sweeps silently skip clashing characteristics.
std::vector<std::int64_t> fields_for(const SuiteOptions& options, const CyclotomicData& data,
                                     const std::vector<std::int64_t>& fallback) {
  std::vector<std::int64_t> out;
  for (auto q : field_list(options, fallback)) {
    if (admissible(data, q)) {
      out.push_back(q);
    } else if (options.data && !options.fields.empty()) {
      throw Error(ErrorKind::CharacteristicClash,
                  "q = " + std::to_string(q) + " clashes with " + data.to_string());
    }
  }
  return out;
}

std::vector<CountReport> suite_main(const SuiteOptions& options) {
  std::vector<std::pair<CyclotomicData, std::int64_t>> work;
  for (const auto& data : data_list(options)) {
    std::vector<std::int64_t> fallback;
    for (auto q : prime_powers_upto(13)) fallback.push_back(q);
    if (data.r() + data.s() <= 4) {
      fallback.push_back(25);
      fallback.push_back(31);
    }
    for (auto q : fields_for(options, data, fallback)) work.emplace_back(data, q);
  }
  std::set<std::int64_t> qs;
  for (const auto& w : work) qs.insert(w.second);
  TablePool pool(qs, options);
  std::vector<Job> jobs;
  for (const auto& [data, q] : work) {
    jobs.push_back([&, data = data, q = q] {
      VarietyCounter counter(pool.at(q), data);
      std::vector<CountReport> out;
      for (Elem lam : sweep(options, q)) {
        if (counter.singular(lam) && !options.lams) continue;
        out.push_back(counter.main_theorem_check(lam));
      }
      return out;
    });
  }
  return run_jobs(jobs, options.jobs);
}

std::vector<CountReport> suite_hd(const SuiteOptions& options) {
  const auto fields = field_list(options, {7, 9, 13, 25, 27});
  TablePool pool({fields.begin(), fields.end()}, options);
  std::vector<Job> jobs;
  for (auto q : fields) {
    jobs.push_back([&, q] {
      const auto& table = pool.at(q);
      std::vector<CountReport> out;
      for (auto n : divisors(q - 1)) {
        std::int64_t zero = 0;
        for (std::int64_t m = 0; m < q - 1; ++m) {
          zero += table.hasse_davenport_defect(n, m).is_zero();
        }
        out.push_back(CountReport::make("hd N=" + std::to_string(n) + " (m with zero defect)", q,
                                        -1, Rat(static_cast<long>(zero)),
                                        Rat(static_cast<long>(q - 1))));
      }
      return out;
    });
  }
  return run_jobs(jobs, options.jobs);
}

std::vector<CountReport> suite_stickelberger(const SuiteOptions& options) {
  std::vector<CountReport> out;
  for (auto q : field_list(options, {8, 9, 25, 27, 49})) {
    const auto [p, f] = *prime_power_decomposition(q);
    std::int64_t agree = 0;
    std::int64_t complementary = 0;
    for (std::int64_t r = 0; r < q - 1; ++r) {
      const Int sigma = stickelberger_sigma(p, f, r);
      agree += sigma == Int(static_cast<long>(stickelberger_digit_sum(p, f, r)));
      if (r > 0) {
        const Int other = stickelberger_sigma(p, f, q - 1 - r);
        complementary += sigma + other == Int(static_cast<long>(f * (p - 1)));
      }
    }
    out.push_back(CountReport::make("stickelberger digit sum (r agreeing)", q, -1,
                                    Rat(static_cast<long>(agree)),
                                    Rat(static_cast<long>(q - 1))));
    out.push_back(CountReport::make("stickelberger complement (r agreeing)", q, -1,
                                    Rat(static_cast<long>(complementary)),
                                    Rat(static_cast<long>(q - 2))));
  }
  return out;
}

std::vector<CountReport> suite_rewrite(const SuiteOptions& options) {
  std::vector<std::pair<CyclotomicData, std::int64_t>> work;
  for (const auto& data : data_list(options)) {
    for (auto q : fields_for(options, data, prime_powers_upto(31))) {
      if (data.params.fits_field(q - 1)) {
        work.emplace_back(data, q);
      } else if (options.data && !options.fields.empty()) {
        throw Error(ErrorKind::BadFieldForParams,
                    "q - 1 = " + std::to_string(q - 1) + " is not divisible by " +
                        std::to_string(data.params.common_denominator()));
      }
    }
  }
  std::set<std::int64_t> qs;
  for (const auto& w : work) qs.insert(w.second);
  TablePool pool(qs, options);
  std::vector<Job> jobs;
  for (const auto& [data, q] : work) {
    jobs.push_back([&, data = data, q = q] {
      const auto& table = pool.at(q);
      GeneralSum general(table, data.params);
      OverQSum over_q(table, data);
      std::vector<CountReport> out;
      for (Elem t : sweep(options, q)) {
        const auto value = general.h(t).as_rational();
        const Rat formula = over_q.at(t).value;
        const std::string label = "rewrite " + data.to_string();
        if (value) {
          out.push_back(CountReport::make(label, q, t, *value, formula));
        } else {
          auto r = CountReport::make(label + " (general value not rational)", q, t, Rat(0),
                                     formula);
          r.equal = false;
          out.push_back(std::move(r));
        }
      }
      return out;
    });
  }
  return run_jobs(jobs, options.jobs);
}

std::vector<CountReport> suite_ono(const SuiteOptions& options) {
  const auto fields = field_list(options, prime_powers_upto(49));
  std::vector<std::pair<CurveKind, std::int64_t>> work;
  for (auto q : fields) {
    const auto p = prime_power_decomposition(q)->first;
    for (auto kind : {CurveKind::Legendre, CurveKind::KatzCurve, CurveKind::CubicRoots}) {
      const bool clash = kind == CurveKind::Legendre ? p == 2 : (p == 2 || p == 3);
      if (!clash) work.emplace_back(kind, q);
    }
  }
  std::set<std::int64_t> qs;
  for (const auto& w : work) qs.insert(w.second);
  TablePool pool(qs, options);
  std::vector<Job> jobs;
  for (const auto& [kind, q] : work) {
    jobs.push_back([&, kind = kind, q = q] {
      CurveCounter counter(pool.at(q), kind);
      std::vector<CountReport> out;
      for (Elem v : sweep(options, q)) {
        if (!counter.admissible(v) && !options.lams) continue;
        out.push_back(counter.count(v));
      }
      return out;
    });
  }
  return run_jobs(jobs, options.jobs);
}

struct GeneralSpot {
  HGParams params;
  std::vector<std::int64_t> fields;
};

std::vector<GeneralSpot> general_spots() {
  auto f = [](std::int64_t n, std::int64_t d) { return Frac::make(n, d); };
  return {
      {HGParams::make({f(1, 5)}, {f(0, 1)}), {11, 31}},
      {HGParams::make({f(1, 3)}, {f(1, 2)}), {7, 13}},
      {HGParams::make({f(1, 4), f(1, 3)}, {f(1, 2), f(0, 1)}), {13, 25}},
      {HGParams::make({f(1, 6), f(1, 2)}, {f(1, 3), f(0, 1)}), {7, 13}},
      {HGParams::make({f(1, 2), f(1, 2)}, {f(0, 1), f(0, 1)}), {5, 13}},
  };
}

// The Landau exponent is an integer: each summand of the Landau function is.
bool is_q_lambda_integral(const CycloNum& h, const Rat& lambda, std::int64_t q) {
  CycloNum scaled = h * rpow(Rat(static_cast<long>(q)), lambda.get_num().get_si());
  return scaled.reduced().has_integral_coefficients();
}

std::vector<CountReport> suite_denominator(const SuiteOptions& options) {
  std::vector<std::pair<CyclotomicData, std::int64_t>> work;
  for (const auto& data : data_list(options)) {
    for (auto q : fields_for(options, data, prime_powers_upto(31))) work.emplace_back(data, q);
  }
  std::vector<std::pair<GeneralSpot, std::int64_t>> spots;
  if (!options.data) {
    for (const auto& spot : general_spots()) {
      for (auto q : field_list(options, spot.fields)) {
        if (spot.params.fits_field(q - 1)) spots.emplace_back(spot, q);
      }
    }
  }
  std::set<std::int64_t> qs;
  for (const auto& w : work) qs.insert(w.second);
  for (const auto& w : spots) qs.insert(w.second);
  TablePool pool(qs, options);
  std::vector<Job> jobs;
  for (const auto& [data, q] : work) {
    jobs.push_back([&, data = data, q = q] {
      const auto& table = pool.at(q);
      OverQSum over_q(table, data);
      const Rat lambda = landau_bound(data);
      const Int bound = Int(table.field().f()) * (lambda.get_num() - std::min(data.r(), data.s()));
      std::vector<CountReport> out;
      for (Elem t : sweep(options, q)) {
        const HValue h = over_q.at(t);
        const Int v(h.p_valuation);
        out.push_back(CountReport::make("denominator " + data.to_string() +
                                            " (min(v_p(H), f(lambda-min(r,s))))",
                                        q, t, Rat(v < bound ? v : bound), Rat(bound)));
      }
      return out;
    });
  }
  for (const auto& [spot, q] : spots) {
    jobs.push_back([&, spot = spot, q = q] {
      GeneralSum general(pool.at(q), spot.params);
      const Rat lambda = landau_bound(spot.params);
      std::vector<CountReport> out;
      for (Elem t : sweep(options, q)) {
        const bool ok = is_q_lambda_integral(general.h(t), lambda, q);
        out.push_back(CountReport::make("denominator general " + spot.params.to_string() +
                                            " (q^lambda H integral)",
                                        q, t, Rat(ok ? 1 : 0), Rat(1)));
      }
      return out;
    });
  }
  return run_jobs(jobs, options.jobs);
}

std::vector<CountReport> suite_cells(const SuiteOptions& options) {
  std::vector<Job> jobs;
  for (int r = 1; r <= 6; ++r) {
    for (int s = 1; s <= 6; ++s) {
      jobs.push_back([&, r, s] {
        std::set<std::int64_t> qs;
        if (!options.fields.empty()) {
          qs.insert(options.fields.begin(), options.fields.end());
        } else {
          qs = {2, 3, 7, 13};
          // one more sample point than the degree of every identity in q
          for (std::int64_t q = 2; q <= r + s + 1; ++q) qs.insert(q);
        }
        std::vector<CountReport> out;
        for (auto which : {CellIdentity::Term, CellIdentity::Main, CellIdentity::Maximal}) {
          for (auto q : qs) out.push_back(cell_sum_identity(r, s, q, which));
        }
        return out;
      });
    }
  }
  auto out = run_jobs(jobs, options.jobs);
  const std::set<std::int64_t> anchors =
      options.fields.empty() ? std::set<std::int64_t>{2, 3, 7, 13}
                             : std::set<std::int64_t>(options.fields.begin(), options.fields.end());
  for (auto q : anchors) {
    const Int Q(static_cast<long>(q));
    out.push_back(
        CountReport::make("P_23 = q^2+3q+1", q, -1, Rat(p_rs(2, 3, Q)), Rat(Q * Q + 3 * Q + 1)));
  }
  return out;
}

std::vector<CountReport> suite_alt(const SuiteOptions& options) {
  const AltVarietySpec spec = options.alt ? *options.alt : AltVarietySpec::ono();
  const bool ono = !options.alt || (spec.a_list == AltVarietySpec::ono().a_list &&
                                    spec.blocks == AltVarietySpec::ono().blocks);
  const auto fields = field_list(options, {5, 9, 13});
  TablePool pool({fields.begin(), fields.end()}, options);
  std::vector<Job> jobs;
  for (auto q : fields) {
    jobs.push_back([&, q] {
      const auto& table = pool.at(q);
      const auto& field = table.field();
      AltVarietyCounter counter(table, spec);
      std::vector<CountReport> out;
      const auto lams = sweep(options, q);
      for (Elem lam : lams) out.push_back(counter.count(lam));
      if (!ono || field.p() == 2) return out;
      // Dehomogenizing both blocks turns the variety into the affine part of
      // y^2 = x(x-1)(x-16 lam) away from y = 0.
      CurveCounter legendre(table, CurveKind::Legendre);
      const Elem sixteen = field.from_int(16);
      const Int Q(static_cast<long>(q));
      const int sign = ((q - 1) / 2) % 2 == 0 ? 1 : -1;
      for (Elem lam : lams) {
        const Elem t = field.mul(sixteen, lam);
        if (!legendre.admissible(t)) continue;
        const Int e = legendre.brute(t);
        out.push_back(CountReport::make("alt-legendre |V| = q-3-(-1)^((q-1)/2)(q+1-|E_16lam|)",
                                        q, lam, Rat(counter.brute(lam)),
                                        Rat(Q - 3 - sign * (Q + 1 - e))));
      }
      return out;
    });
  }
  return run_jobs(jobs, options.jobs);
}

}  // namespace

std::vector<CountReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "main") return suite_main(options);
  if (name == "hd") return suite_hd(options);
  if (name == "stickelberger") return suite_stickelberger(options);
  if (name == "rewrite") return suite_rewrite(options);
  if (name == "ono") return suite_ono(options);
  if (name == "denominator") return suite_denominator(options);
  if (name == "cells") return suite_cells(options);
  if (name == "alt") return suite_alt(options);
  throw Error(ErrorKind::ParseError, "unknown suite '" + name + "'");
}

}  // namespace fhyper
