#include "fhyper/gauss.hpp"

#include <string>

namespace fhyper {

GaussTable::GaussTable(FieldTable field, Elem psi_scale)
    : field_(std::move(field)), psi_scale_(psi_scale), order_(field_.p() * field_.order()) {
  if (psi_scale_ == 0 || psi_scale_ >= static_cast<Elem>(field_.q())) {
    throw Error(ErrorKind::BadParameter, "additive character scale must be a nonzero element");
  }
  const std::int64_t n = qm1();
  sums_.reserve(n);
  for (std::int64_t m = 0; m < n; ++m) {
    CycloNum g(order_);
    for (Elem x = 1; x < static_cast<Elem>(field_.q()); ++x) {
      const std::int64_t e = mod(omega_exponent(x, m) + psi_exponent(x), order_);
      g.add_to_numerator(e, 1);
    }
    sums_.push_back(std::move(g));
  }
}

std::int64_t GaussTable::omega_exponent(Elem x, std::int64_t k) const {
  const std::int64_t n = qm1();
  const auto l = static_cast<__int128>(field_.log(x)) * mod(k, n);
  return field_.p() * static_cast<std::int64_t>(l % n);
}

std::int64_t GaussTable::psi_exponent(Elem x) const {
  return qm1() * field_.trace(field_.mul(psi_scale_, x));
}

int GaussTable::omega_minus_one_sign(std::int64_t m) const {
  if (field_.p() == 2) return 1;
  return mod(m, 2) == 0 ? 1 : -1;
}

CycloNum GaussTable::gauss_inverse(std::int64_t m) const {
  if (mod(m, qm1()) == 0) return CycloNum::constant(order_, Rat(-1));
  return gauss_sum(-m) * Rat(omega_minus_one_sign(m), static_cast<long>(q()));
}

CycloNum GaussTable::jacobi_sum(std::int64_t m, std::int64_t n) const {
  return gauss_sum(m) * gauss_sum(n) * gauss_inverse(m + n);
}

CycloNum GaussTable::hasse_davenport_defect(std::int64_t divisor, std::int64_t m) const {
  if (divisor < 1 || qm1() % divisor != 0) {
    throw Error(ErrorKind::BadDivisor,
                std::to_string(divisor) + " does not divide q-1 = " + std::to_string(qm1()));
  }
  const std::int64_t step = qm1() / divisor;
  CycloNum rhs = one();
  for (std::int64_t j = 0; j < divisor; ++j) {
    rhs *= gauss_sum(m + j * step);
    rhs *= gauss_inverse(j * step);
  }
  // omega(N)^{N m} with N read in the prime field
  const Elem n_elem = field_.from_int(divisor);
  rhs = rhs.rotated(omega_exponent(n_elem, divisor * m));
  return gauss_sum(divisor * m) + rhs;
}

Int stickelberger_sigma(std::int64_t p, int f, std::int64_t r) {
  const Int q = ipow(Int(static_cast<long>(p)), f);
  const Int qm1 = q - 1;
  Rat total = 0;
  Int pi = 1;
  for (int i = 1; i <= f; ++i) {
    pi *= static_cast<long>(p);
    Rat x(pi * static_cast<long>(r), qm1);
    x.canonicalize();
    total += frac(x);
  }
  total *= static_cast<long>(p - 1);
  if (total.get_den() != 1) {
    throw Error(ErrorKind::BadParameter, "digit-sum formula produced a non-integer");
  }
  return total.get_num();
}

std::int64_t stickelberger_digit_sum(std::int64_t p, int f, std::int64_t r) {
  std::int64_t q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  std::int64_t x = mod(r, q - 1);
  std::int64_t sum = 0;
  while (x > 0) {
    sum += x % p;
    x /= p;
  }
  return sum;
}

}  // namespace fhyper
