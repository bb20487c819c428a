#include "fhyper/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace fhyper {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::int64_t lcm_of(const std::vector<std::int64_t>& values) {
  std::int64_t l = 1;
  for (auto v : values) l = std::lcm(l, v);
  return l;
}

std::int64_t gcd_of(const std::vector<std::int64_t>& values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Int ipow(const Int& base, std::int64_t e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

Rat rpow(const Rat& base, std::int64_t e) {
  if (e < 0) return rpow(Rat(1) / base, -e);
  Rat out(ipow(base.get_num(), e), ipow(base.get_den(), e));
  out.canonicalize();
  return out;
}

Rat frac(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(fl);
}

int p_valuation(const Rat& x, std::int64_t p) {
  if (x == 0) return kInfiniteValuation;
  const Int prime(static_cast<long>(p));
  auto count = [&prime](Int v) {
    int k = 0;
    while (mpz_divisible_p(v.get_mpz_t(), prime.get_mpz_t())) {
      v /= prime;
      ++k;
    }
    return k;
  };
  return count(x.get_num()) - count(x.get_den());
}

}  // namespace fhyper
