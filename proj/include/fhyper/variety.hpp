#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fhyper/hyper.hpp"
#include "fhyper/report.hpp"
#include "fhyper/toric.hpp"

namespace fhyper {

// One coordinate of a torus system: its sign in the linear form and its
// exponent in the monomial.
struct TorusVar {
  int sign = 1;
  std::int64_t exponent = 0;
};

// Solutions with every coordinate in F_q^x of sum_v sign_v x_v = 0, with
// coordinate `fixed` set to 1, bucketed by log(prod_v x_v^{e_v}) mod (q-1).
std::vector<std::int64_t> torus_histogram(const FieldTable& field,
                                          const std::vector<TorusVar>& vars, std::size_t fixed);

// #{z in F_q^x : z^a = c}, indexed by log c.
std::vector<std::int64_t> power_fiber_sizes(const FieldTable& field, std::int64_t a);

// Point counts on V_lambda, its boundary components and its completion for one
// (field, data) pair. Brute-force histograms are built lazily per cell and
// shared across lambda; all methods are thread-safe.
class VarietyCounter {
 public:
  VarietyCounter(const GaussTable& table, const CyclotomicData& data);

  const CyclotomicData& data() const { return data_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const GaussTable& table() const { return table_; }
  // The element M of F_q; the fiber lam is singular when M lam = 1.
  Elem m_element() const { return m_elem_; }
  bool singular(Elem lam) const;

  CountReport torus_count(Elem lam) const;
  CountReport component_count(const Cell& cell, Elem lam) const;
  // Formula withheld when M lam = 1.
  CountReport completed_count(Elem lam) const;
  // Throws SingularFiber when M lam = 1.
  CountReport main_theorem_check(Elem lam) const;

  Int torus_brute(Elem lam) const;
  Int component_brute(const Cell& cell, Elem lam) const;
  Rat torus_formula(Elem lam) const;
  // P_rs(q) + (-1)^{r+s-1} q^{min(r,s)-1} H(M lam)
  Rat completed_formula(Elem lam) const;
  // Sum of N(C) over all non-maximal cells.
  Rat counting_number_total(Elem lam) const;

 private:
  const std::vector<std::int64_t>& histogram(const Cell& cell) const;

  const GaussTable& table_;
  CyclotomicData data_;
  std::vector<Cell> cells_;
  ProductFourier fourier_;
  OverQSum over_q_;
  Elem m_elem_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<std::pair<int, int>>, std::shared_ptr<std::vector<std::int64_t>>>
      histograms_;
  mutable std::map<std::int64_t, std::shared_ptr<std::vector<std::int64_t>>> fibers_;
};

CountReport torus_count(const GaussTable& table, const CyclotomicData& data, Elem lam);
CountReport component_count(const GaussTable& table, const CyclotomicData& data,
                            const Cell& cell, Elem lam);
CountReport completed_count(const GaussTable& table, const CyclotomicData& data, Elem lam);
CountReport main_theorem_check(const GaussTable& table, const CyclotomicData& data, Elem lam);

// Exponents a_1..a_k summing to zero, split into blocks (1-based indices)
// each summing to zero with coprime entries.
struct AltVarietySpec {
  std::vector<std::int64_t> a_list;
  std::vector<std::vector<int>> blocks;

  static AltVarietySpec make(std::vector<std::int64_t> a_list,
                             std::vector<std::vector<int>> blocks);
  // (2,-1,-1,2,-1,-1) split as {1,2,3},{4,5,6}
  static AltVarietySpec ono();
  // (-1)^{sum of |a_i| over negative a_i}
  int epsilon() const;
  std::string to_string() const;
};

// Q_r(x) = ((x-1)^{r-1} + (-1)^r) / x
Rat q_polynomial(int r, const Rat& x);

class AltVarietyCounter {
 public:
  AltVarietyCounter(const GaussTable& table, const AltVarietySpec& spec);
  CountReport count(Elem lam) const;
  Int brute(Elem lam) const;
  Rat formula(Elem lam) const;
  const AltVarietySpec& spec() const { return spec_; }

 private:
  const GaussTable& table_;
  AltVarietySpec spec_;
  std::vector<std::int64_t> histogram_;
  std::vector<CycloNum> terms_;
};

CountReport alt_variety_count(const GaussTable& table, const AltVarietySpec& spec, Elem lam);

enum class CurveKind { CubicRoots, KatzCurve, Legendre };
std::string_view to_string(CurveKind kind);
CurveKind curve_kind_from_string(const std::string& name);
// The over-Q datum whose H_q describes the family.
CyclotomicData curve_datum(CurveKind kind);

class CurveCounter {
 public:
  CurveCounter(const GaussTable& table, CurveKind kind);
  // Throws BadParameter on excluded parameter values.
  CountReport count(Elem param) const;
  Int brute(Elem param) const;
  Rat formula(Elem param) const;
  // Parameters outside the family's excluded set.
  bool admissible(Elem param) const;

 private:
  const GaussTable& table_;
  CurveKind kind_;
  OverQSum over_q_;
};

CountReport curve_counts(const GaussTable& table, CurveKind kind, Elem param);

// The datum (30,1;15,10,6).
CyclotomicData surface_datum();
CountReport surface_count(const GaussTable& table, Elem lam);

}  // namespace fhyper
