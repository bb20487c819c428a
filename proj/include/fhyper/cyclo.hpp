#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "fhyper/errors.hpp"
#include "fhyper/numtheory.hpp"

namespace fhyper {

// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<Int>& cyclotomic_polynomial(std::int64_t n);

// Exact element of Q(zeta_N) in the group-ring presentation
//   (sum_k num[k] zeta_N^k) / den,   den > 0,
// i.e. a vector of rationals sharing one denominator. The representation is
// not unique; equality and rationality are decided after reduction modulo
// Phi_N.
class CycloNum {
 public:
  CycloNum() : CycloNum(1) {}
  explicit CycloNum(std::int64_t order);

  static CycloNum root_of_unity(std::int64_t order, std::int64_t k);
  static CycloNum constant(std::int64_t order, const Rat& value);

  std::int64_t order() const { return static_cast<std::int64_t>(num_.size()); }
  const std::vector<Int>& numerators() const { return num_; }
  const Int& denominator() const { return den_; }
  Rat coeff(std::int64_t k) const;

  // num[k] += c (the denominator is left untouched).
  void add_to_numerator(std::int64_t k, const Int& c) { num_[k] += c; }

  CycloNum& operator+=(const CycloNum& other);
  CycloNum& operator-=(const CycloNum& other);
  CycloNum& operator*=(const CycloNum& other);
  CycloNum& operator*=(const Rat& scalar);
  CycloNum operator-() const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const Rat& s) { return a *= s; }
  friend CycloNum operator*(const Rat& s, CycloNum a) { return a *= s; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  // this * zeta_N^k
  CycloNum rotated(std::int64_t k) const;
  // this += scale * other * zeta_N^shift
  void add_rotated(const CycloNum& other, std::int64_t shift, const Rat& scale = Rat(1));

  // Canonical representative: remainder modulo Phi_N, so only the first
  // phi(N) coefficients can be nonzero.
  CycloNum reduced() const;
  bool is_zero() const;
  std::optional<Rat> as_rational() const;
  bool has_integral_coefficients() const;

  // Image under the automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
  CycloNum galois(std::int64_t k) const;
  // Same element seen in Q(zeta_{N*factor}).
  CycloNum embedded(std::int64_t factor) const;

  // Floating-point evaluation at zeta_N = exp(2 pi i / N); debugging only.
  std::complex<double> evaluate() const;

  nlohmann::json to_json() const;
  static CycloNum from_json(const nlohmann::json& j);

 private:
  void normalize();

  std::vector<Int> num_;
  Int den_{1};
};

// Error raised when a value expected to be rational is not; carries the
// reduced residual (value minus its constant term) for diagnostics.
class NotRationalError : public Error {
 public:
  explicit NotRationalError(CycloNum residual);
  const CycloNum& residual() const { return residual_; }

 private:
  CycloNum residual_;
};

CycloNum root_of_unity(std::int64_t order, std::int64_t k);
CycloNum mul(const CycloNum& a, const CycloNum& b);
Rat reduce_to_rational(const CycloNum& a);

}  // namespace fhyper
