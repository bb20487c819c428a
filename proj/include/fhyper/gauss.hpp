#pragma once

#include <cstdint>
#include <vector>

#include "fhyper/cyclo.hpp"
#include "fhyper/field.hpp"

namespace fhyper {

// Gauss sums g(m) = sum_{x != 0} omega(x)^m psi_q(x) of one field, all living
// in Q(zeta_N) with N = p (q - 1). Inside that field zeta_{q-1} = zeta_N^p and
// zeta_p = zeta_N^{q-1}.
//
// The additive character is psi_q(x) = zeta_p^{Tr(c x)} for a fixed scale c
// (c = 1 unless a rescaled character is requested). All q - 1 sums are
// computed at construction, so a table can be shared between threads.
class GaussTable {
 public:
  explicit GaussTable(FieldTable field, Elem psi_scale = 1);

  const FieldTable& field() const { return field_; }
  std::int64_t q() const { return field_.q(); }
  std::int64_t p() const { return field_.p(); }
  // q - 1
  std::int64_t qm1() const { return field_.order(); }
  // N = p (q - 1)
  std::int64_t order() const { return order_; }
  Elem psi_scale() const { return psi_scale_; }

  // Exponent e with zeta_{q-1}^k = zeta_N^e.
  std::int64_t unit_exponent(std::int64_t k) const { return field_.p() * mod(k, qm1()); }
  // Exponent of omega(x)^k, x != 0.
  std::int64_t omega_exponent(Elem x, std::int64_t k) const;
  // Exponent of psi_q(x).
  std::int64_t psi_exponent(Elem x) const;
  // omega(-1)^m as +-1.
  int omega_minus_one_sign(std::int64_t m) const;

  const CycloNum& gauss_sum(std::int64_t m) const { return sums_[mod(m, qm1())]; }
  // 1/g(m) through g(m) g(-m) = omega(-1)^m q; no field inversion.
  CycloNum gauss_inverse(std::int64_t m) const;
  // g(m) g(n) / g(m + n)
  CycloNum jacobi_sum(std::int64_t m, std::int64_t n) const;
  // g(N m) + omega(N)^{N m} prod_j g(m + j(q-1)/N) / g(j(q-1)/N); zero when
  // the Hasse-Davenport product relation holds. N must divide q - 1.
  CycloNum hasse_davenport_defect(std::int64_t divisor, std::int64_t m) const;

  CycloNum zero() const { return CycloNum(order_); }
  CycloNum one() const { return CycloNum::constant(order_, Rat(1)); }

 private:
  FieldTable field_;
  Elem psi_scale_;
  std::int64_t order_;
  std::vector<CycloNum> sums_;
};

// sigma(r) through the fractional-part description
//   (p - 1) sum_{i=1}^{f} {p^i r / (q - 1)},
// valid for every integer r.
Int stickelberger_sigma(std::int64_t p, int f, std::int64_t r);
// Base-p digit sum of r mod (q - 1).
std::int64_t stickelberger_digit_sum(std::int64_t p, int f, std::int64_t r);

}  // namespace fhyper
