#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fhyper/cyclo.hpp"
#include "fhyper/gauss.hpp"

namespace fhyper {

// A rational number mod Z, stored reduced with 0 <= num < den. The class of
// 1 is stored as 0/1 and printed as "1".
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Frac make(std::int64_t num, std::int64_t den);
  static Frac parse(const std::string& text);

  // Representative in [0, 1).
  Rat value() const { return Rat(static_cast<long>(num), static_cast<long>(den)); }
  // Representative in (0, 1].
  Rat unit_value() const { return num == 0 ? Rat(1) : value(); }
  Frac operator-() const { return make(-num, den); }
  Frac operator+(const Frac& o) const { return make(num * o.den + o.num * den, den * o.den); }
  Frac scaled(std::int64_t k) const { return make(num * k, den); }
  // (q-1) * this, which must be an integer.
  std::int64_t times(std::int64_t qm1) const { return num * (qm1 / den); }
  bool fits(std::int64_t qm1) const { return qm1 % den == 0; }
  std::string to_string() const;

  friend bool operator==(const Frac&, const Frac&) = default;
  friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

// Hypergeometric parameter multisets alpha, beta (sorted), |alpha| = |beta| =
// d >= 1, disjoint mod Z.
class HGParams {
 public:
  static HGParams make(std::vector<Frac> alpha, std::vector<Frac> beta);

  const std::vector<Frac>& alpha() const { return alpha_; }
  const std::vector<Frac>& beta() const { return beta_; }
  int d() const { return static_cast<int>(alpha_.size()); }
  // lcm of all denominators
  std::int64_t common_denominator() const { return common_den_; }
  bool fits_field(std::int64_t qm1) const { return qm1 % common_den_ == 0; }
  // |beta| (q-1) as an integer, for a field that fits.
  std::int64_t beta_weight(std::int64_t qm1) const;
  std::string to_string() const;

  friend bool operator==(const HGParams&, const HGParams&) = default;

 private:
  std::vector<Frac> alpha_;
  std::vector<Frac> beta_;
  std::int64_t common_den_ = 1;
};

// Parameters defined over Q, realized by prod (x^{p_i} - 1) / prod (x^{q_j} - 1).
struct CyclotomicData {
  std::vector<std::int64_t> p_list;
  std::vector<std::int64_t> q_list;
  Rat M;
  int epsilon = 1;
  // multiplicity of Phi_e in D(X) = gcd of numerator and denominator
  std::map<std::int64_t, int> d_mult;
  HGParams params;

  int r() const { return static_cast<int>(p_list.size()); }
  int s() const { return static_cast<int>(q_list.size()); }
  std::vector<std::int64_t> all_parameters() const;
  std::string to_string() const;
};

CyclotomicData params_from_cyclotomic(std::vector<std::int64_t> p_list,
                                      std::vector<std::int64_t> q_list);
// Canonical (p, q) lists by greedy peeling from the largest divisor.
CyclotomicData cyclotomic_from_params(const HGParams& params);
bool is_galois_stable(const std::vector<Frac>& values);

// min(|I(m)|, |J(m)|), the multiplicity of exp(2 pi i m / (q-1)) in D(X).
int s_multiplicity(const CyclotomicData& data, std::int64_t m, std::int64_t q);

// -min over x in [0,1] and k coprime to the common denominator of the Landau
// function lambda(k alpha, k beta, x).
Rat landau_bound(const HGParams& params);
// Essential minimum over x in (0,1) of sum {p_i x} + sum {-q_j x}, i.e. the
// value of the piecewise constant function on its open intervals.
Rat landau_bound(const CyclotomicData& data);

enum class Provenance { GeneralDefinition, OverQFormula, PointCount };
std::string_view to_string(Provenance p);

struct HValue {
  Rat value;
  std::int64_t q = 0;
  Provenance provenance = Provenance::OverQFormula;
  int p_valuation = kInfiniteValuation;
};

// Katz's exponential sum over the torus t x_1...x_d = y_1...y_d, by brute force.
CycloNum hyp_exponential_sum(const GaussTable& table, const HGParams& params, Elem t);
CycloNum s_sum(const GaussTable& table, const HGParams& params, Elem t);
CycloNum h_general(const GaussTable& table, const HGParams& params, Elem t);
HValue h_over_q(const GaussTable& table, const CyclotomicData& data, Elem t);
CycloNum greene_value(const GaussTable& table, const HGParams& params, Elem t);
// The factor omega(-1)^{|beta|(q-1)} q^{-d} prod g(a_i) g(-b_i) / g(a_i - b_i)
// that converts H_q into Greene's normalization.
CycloNum greene_factor(const GaussTable& table, const HGParams& params);

// Precomputed Fourier coefficients of S_q; evaluates S_q and H_q for many t.
class GeneralSum {
 public:
  GeneralSum(const GaussTable& table, const HGParams& params);
  // (q-1) S_q(t)
  CycloNum scaled_s(Elem t) const;
  CycloNum s(Elem t) const;
  CycloNum h(Elem t) const;
  // prod_i 1 / (g(alpha_i (q-1)) g(-beta_i (q-1)))
  const CycloNum& normalizer() const { return normalizer_; }
  // prod_i g(m + alpha_i (q-1)) g(-m - beta_i (q-1))
  const CycloNum& coefficient(std::int64_t m) const { return terms_[m]; }

 private:
  const GaussTable& table_;
  HGParams params_;
  std::vector<CycloNum> terms_;
  CycloNum normalizer_;
};

// The over-Q sum with weights q^{s(m) - s(0)}, precomputed for many t.
class OverQSum {
 public:
  OverQSum(const GaussTable& table, const CyclotomicData& data);
  HValue at(Elem t) const;
  const CyclotomicData& data() const { return data_; }

 private:
  const GaussTable& table_;
  CyclotomicData data_;
  Elem eps_m_inv_;
  std::vector<CycloNum> terms_;  // q^{s(m)} g(pm, -qm)
  int s0_;
};

// sum over m with a m = 0 mod (q-1) of g(pm, -qm) omega(eps lam)^m. The
// restriction only depends on gcd(a, q-1) (a = 0 keeps every m), and results
// are memoized per (lam, gcd). Thread-safe.
class ProductFourier {
 public:
  ProductFourier(const GaussTable& table, const CyclotomicData& data);
  Rat restricted_sum(Elem lam, std::int64_t a) const;
  const GaussTable& table() const { return table_; }
  const CyclotomicData& data() const { return data_; }

 private:
  const GaussTable& table_;
  CyclotomicData data_;
  Elem eps_;
  std::vector<CycloNum> terms_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Elem, std::int64_t>, Rat> memo_;
};

// g(p_1 m)...g(p_r m) g(-q_1 m)...g(-q_s m) for m = 0..q-2, reduced.
std::vector<CycloNum> gauss_product_series(const GaussTable& table,
                                           const std::vector<std::int64_t>& p_list,
                                           const std::vector<std::int64_t>& q_list);

// Throws CharacteristicClash unless p divides none of the p_i, q_j.
void require_coprime_characteristic(const CyclotomicData& data, std::int64_t p);
// The element epsilon * M^{-1} (or M when invert is false) of F_q.
Elem scaling_element(const FieldTable& field, const CyclotomicData& data, bool invert);

// Parameter strings: "alpha=1/3,2/3 beta=1,1" or "p=3 q=1,1,1".
struct ParamSpec {
  HGParams params;
  std::optional<CyclotomicData> over_q;
};
ParamSpec parse_param_spec(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);
std::vector<Frac> parse_frac_list(const std::string& text);

}  // namespace fhyper
