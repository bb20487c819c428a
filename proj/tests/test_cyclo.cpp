#include <gtest/gtest.h>

#include <random>

#include "fhyper/cyclo.hpp"
#include "test_util.hpp"

using namespace fhyper;

namespace {

CycloNum z(std::int64_t n, std::int64_t k) { return root_of_unity(n, k); }
CycloNum c(std::int64_t n, long v) { return CycloNum::constant(n, Rat(v)); }

CycloNum random_element(std::mt19937& rng, std::int64_t n) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  CycloNum out(n);
  for (std::int64_t k = 0; k < n; ++k) out.add_to_numerator(k, Int(coeff(rng)));
  return out * Rat(1, den(rng));
}

}  // namespace

TEST(Cyclo, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<Int>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<Int>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Int>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Int>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2
  const auto& p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(static_cast<std::int64_t>(p105.size()) - 1, euler_phi(105));
  EXPECT_EQ(p105[7], Int(-2));
}

TEST(Cyclo, RootIdentities) {
  EXPECT_EQ(z(4, 1) * z(4, 1), c(4, -1));
  EXPECT_EQ(reduce_to_rational(z(4, 1) * z(4, 1)), Rat(-1));
  EXPECT_EQ(z(6, 1) * z(6, 1) * z(6, 1), c(6, -1));
  EXPECT_EQ(z(3, 1) + z(3, 2), c(3, -1));
  CycloNum sum(7);
  for (int k = 0; k < 7; ++k) sum += z(7, k);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(z(5, 0), c(5, 1));
  EXPECT_EQ(z(5, 5), c(5, 1));
  EXPECT_EQ(z(5, -1), z(5, 4));
}

TEST(Cyclo, NormOfOnePlusZeta5) {
  // (1 + z)(1 + z^4) = 2 + z + z^4, not rational; its norm to Q is 1
  const auto a = c(5, 1) + z(5, 1);
  const auto b = c(5, 1) - z(5, 1);
  EXPECT_EQ(a * b, c(5, 1) - z(5, 2));
  CycloNum norm = c(5, 1);
  for (int k = 1; k < 5; ++k) norm *= a.galois(k);
  EXPECT_EQ(reduce_to_rational(norm), Rat(1));
}

TEST(Cyclo, NotRational) {
  EXPECT_ERROR_KIND(reduce_to_rational(z(5, 1)), ErrorKind::NotRational);
  try {
    reduce_to_rational(c(5, 3) + z(5, 1));
    FAIL();
  } catch (const NotRationalError& e) {
    EXPECT_FALSE(e.residual().is_zero());
    EXPECT_EQ(e.residual().coeff(0), Rat(0));
  }
  EXPECT_FALSE(z(8, 1).as_rational());
  // sqrt(2) = z8 + z8^7
  const auto root2 = z(8, 1) + z(8, 7);
  EXPECT_FALSE(root2.as_rational());
  EXPECT_EQ(reduce_to_rational(root2 * root2), Rat(2));
}

TEST(Cyclo, OrderMismatch) {
  EXPECT_ERROR_KIND(z(4, 1) + z(6, 1), ErrorKind::OrderMismatch);
  EXPECT_ERROR_KIND(z(4, 1) * z(6, 1), ErrorKind::OrderMismatch);
  EXPECT_EQ(z(4, 1).embedded(3), z(12, 3));
}

TEST(Cyclo, RingAxioms) {
  std::mt19937 rng(11);
  for (std::int64_t n : {1, 2, 6, 12, 15, 28}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_element(rng, n), b = random_element(rng, n),
                 d = random_element(rng, n);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * d, a * (b * d));
      EXPECT_EQ(a * (b + d), a * b + a * d);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(-(-a), a);
      EXPECT_EQ(a.reduced(), a);
      EXPECT_EQ(a.rotated(3), a * z(n, 3));
    }
  }
}

TEST(Cyclo, ReducedIsCanonical) {
  std::mt19937 rng(5);
  for (std::int64_t n : {9, 10, 20}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(rng, n);
      const auto r = a.reduced();
      for (std::int64_t k = euler_phi(n); k < n; ++k) EXPECT_EQ(r.coeff(k), Rat(0));
      // adding a multiple of Phi_n leaves the class unchanged
      CycloNum shifted = a;
      const auto& phi = cyclotomic_polynomial(n);
      for (std::size_t k = 0; k < phi.size(); ++k)
        shifted.add_to_numerator(k, phi[k] * a.denominator() * 3);
      EXPECT_EQ(shifted, a);
      EXPECT_EQ(shifted.reduced().numerators(), r.numerators());
    }
  }
}

TEST(Cyclo, GaloisRationality) {
  // a value is rational exactly when every Galois conjugate agrees with it
  std::mt19937 rng(3);
  const std::int64_t n = 12;
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_element(rng, n);
    CycloNum trace = CycloNum(n);
    for (std::int64_t k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) trace += a.galois(k);
    EXPECT_TRUE(trace.as_rational().has_value());
    bool stable = true;
    for (std::int64_t k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) stable &= (a.galois(k) == a);
    EXPECT_EQ(stable, a.as_rational().has_value());
  }
  EXPECT_EQ(z(7, 2).galois(3), z(7, 6));
}

TEST(Cyclo, Evaluate) {
  const auto v = (z(12, 1) * Rat(3, 2) - c(12, 2)).evaluate();
  EXPECT_NEAR(v.real(), 1.5 * std::cos(M_PI / 6) - 2, 1e-12);
  EXPECT_NEAR(v.imag(), 1.5 * std::sin(M_PI / 6), 1e-12);
}

TEST(Cyclo, IntegralCoefficients) {
  EXPECT_TRUE((z(5, 1) * Int(3) + c(5, 2)).has_integral_coefficients());
  EXPECT_FALSE((z(5, 1) * Rat(1, 2)).has_integral_coefficients());
  // (1 + z + z^2 + z^3 + z^4) / 2 = 0 is integral after reduction
  CycloNum s(5);
  for (int k = 0; k < 5; ++k) s += z(5, k);
  EXPECT_TRUE((s * Rat(1, 2)).has_integral_coefficients());
}

TEST(Cyclo, JsonRoundTrip) {
  std::mt19937 rng(9);
  for (std::int64_t n : {1, 3, 8, 30}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_element(rng, n);
      const auto j = a.to_json();
      EXPECT_EQ(j.at("N").get<std::int64_t>(), n);
      EXPECT_EQ(j.at("coeffs").size(), static_cast<std::size_t>(n));
      EXPECT_EQ(CycloNum::from_json(j), a);
      EXPECT_EQ(CycloNum::from_json(nlohmann::json::parse(j.dump())).numerators(),
                a.numerators());
    }
  }
  const auto j = (z(4, 1) * Rat(1, 2)).to_json();
  EXPECT_EQ(j.dump(), R"({"N":4,"coeffs":["0/1","1/2","0/1","0/1"]})");
}

TEST(Cyclo, JsonErrors) {
  EXPECT_ERROR_KIND(CycloNum::from_json(nlohmann::json::parse(R"({"N":2,"coeffs":["1/1"]})")),
                    ErrorKind::ParseError);
  EXPECT_ERROR_KIND(CycloNum::from_json(nlohmann::json::parse(R"({"coeffs":[]})")),
                    ErrorKind::ParseError);
  EXPECT_ERROR_KIND(
      CycloNum::from_json(nlohmann::json::parse(R"({"N":1,"coeffs":["x/y"]})")),
      ErrorKind::ParseError);
  EXPECT_ERROR_KIND(root_of_unity(0, 1), ErrorKind::BadParameter);
}
