#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fhyper {

using Int = mpz_class;
using Rat = mpq_class;

// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t lcm_of(const std::vector<std::int64_t>& values);
std::int64_t gcd_of(const std::vector<std::int64_t>& values);

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Int binomial(std::int64_t n, std::int64_t k);
Int ipow(const Int& base, std::int64_t e);
Rat rpow(const Rat& base, std::int64_t e);
// Fractional part {x} in [0, 1).
Rat frac(const Rat& x);

// p-adic valuation of a nonzero rational; the sentinel kInfiniteValuation
// stands for v_p(0).
inline constexpr int kInfiniteValuation = 1 << 30;
int p_valuation(const Rat& x, std::int64_t p);

}  // namespace fhyper
