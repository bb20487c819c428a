#include <gtest/gtest.h>

#include "fhyper/hyper.hpp"
#include "fhyper/suites.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fhyper;

namespace {

Frac fr(std::int64_t a, std::int64_t b) { return Frac::make(a, b); }

HGParams hg(std::vector<Frac> alpha, std::vector<Frac> beta) {
  return HGParams::make(std::move(alpha), std::move(beta));
}

HGParams legendre_params() { return hg({fr(1, 2), fr(1, 2)}, {fr(1, 1), fr(1, 1)}); }

// Hyp_q by direct summation over the torus t x_1..x_d = y_1..y_d in the oracle
// field, as an exact element of Q(zeta_{p(q-1)}).
CycloNum direct_hyp(const oracle::Field& F, const HGParams& params, std::int64_t t) {
  const std::int64_t q = F.q(), p = F.p(), qm1 = q - 1, order = p * qm1;
  const int d = params.d();
  std::vector<std::int64_t> hist(order, 0);
  oracle::torus_points(F, 2 * d, [&](const std::vector<std::int64_t>& v) {
    std::int64_t lhs = t, rhs = 1, lin = 0, chr = 0;
    for (int i = 0; i < d; ++i) {
      lhs = F.mul(lhs, v[i]);
      rhs = F.mul(rhs, v[d + i]);
      lin = F.sub(F.add(lin, v[i]), v[d + i]);
      chr += params.alpha()[i].times(qm1) * F.log(v[i]) -
             params.beta()[i].times(qm1) * F.log(v[d + i]);
    }
    if (lhs == rhs) ++hist[mod(p * chr + qm1 * F.trace(lin), order)];
    return false;
  });
  CycloNum out(order);
  for (std::int64_t k = 0; k < order; ++k)
    if (hist[k]) out.add_to_numerator(k, Int(static_cast<long>(hist[k])));
  return out;
}

Rat pochhammer(const Rat& a, int n) {
  Rat out(1);
  for (int k = 0; k < n; ++k) out *= a + k;
  return out;
}

Rat factorial(std::int64_t n) {
  Rat out(1);
  for (std::int64_t k = 2; k <= n; ++k) out *= Rat(static_cast<long>(k));
  return out;
}

// k with k = 1 mod (q-1) and k = g mod p
std::int64_t zeta_p_automorphism(const GaussTable& T, std::int64_t g) {
  for (std::int64_t k = 1; k < T.order(); ++k)
    if (k % T.qm1() == 1 && k % T.p() == g) return k;
  return -1;
}

}  // namespace

TEST(Frac, ParseAndArithmetic) {
  EXPECT_EQ(Frac::parse("1"), fr(0, 1));
  EXPECT_EQ(Frac::parse("2/4"), fr(1, 2));
  EXPECT_EQ(Frac::parse("-1/3"), fr(2, 3));
  EXPECT_EQ(Frac::parse("7/3"), fr(1, 3));
  EXPECT_EQ(fr(1, 3) + fr(2, 3), fr(0, 1));
  EXPECT_EQ(-fr(1, 3), fr(2, 3));
  EXPECT_EQ(fr(0, 1).to_string(), "1");
  EXPECT_EQ(fr(2, 6).to_string(), "1/3");
  EXPECT_EQ(fr(0, 1).unit_value(), Rat(1));
  EXPECT_EQ(fr(1, 4).times(12), 3);
  EXPECT_ERROR_KIND(Frac::parse("1/0"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(Frac::parse("x"), ErrorKind::ParseError);
}

TEST(HGParams, Validation) {
  EXPECT_ERROR_KIND(hg({fr(1, 2)}, {fr(1, 2)}), ErrorKind::BadParameter);
  EXPECT_ERROR_KIND(hg({fr(1, 2)}, {}), ErrorKind::BadParameter);
  EXPECT_ERROR_KIND(hg({}, {}), ErrorKind::BadParameter);
  const auto p = hg({fr(2, 3), fr(1, 3)}, {fr(1, 1), fr(1, 2)});
  EXPECT_EQ(p.alpha(), (std::vector<Frac>{fr(1, 3), fr(2, 3)}));
  EXPECT_EQ(p.beta(), (std::vector<Frac>{fr(0, 1), fr(1, 2)}));
  EXPECT_EQ(p.common_denominator(), 6);
  EXPECT_TRUE(p.fits_field(12));
  EXPECT_FALSE(p.fits_field(10));
  EXPECT_EQ(p.beta_weight(6), 3);
}

TEST(Params, FromCyclotomicExamples) {
  const auto c = params_from_cyclotomic({3}, {1, 2});
  EXPECT_EQ(c.params.alpha(), (std::vector<Frac>{fr(1, 3), fr(2, 3)}));
  EXPECT_EQ(c.params.beta(), (std::vector<Frac>{fr(0, 1), fr(1, 2)}));
  EXPECT_EQ(c.M, Rat(27, 4));
  EXPECT_EQ(c.epsilon, -1);
  EXPECT_EQ(c.r(), 1);
  EXPECT_EQ(c.s(), 2);

  const auto surface = params_from_cyclotomic({30, 1}, {15, 10, 6});
  EXPECT_EQ(surface.params.d(), 8);
  std::vector<Frac> alpha;
  for (int a : {1, 7, 11, 13, 17, 19, 23, 29}) alpha.push_back(fr(a, 30));
  EXPECT_EQ(surface.params.alpha(), alpha);
  EXPECT_EQ(surface.params.beta(),
            (std::vector<Frac>{fr(0, 1), fr(1, 5), fr(1, 3), fr(2, 5), fr(1, 2), fr(3, 5),
                               fr(2, 3), fr(4, 5)}));
  EXPECT_EQ(surface.M, Rat(ipow(2, 14) * ipow(3, 9) * ipow(5, 5)));
  EXPECT_EQ(surface.epsilon, -1);

  const auto leg = params_from_cyclotomic({2, 2}, {1, 1, 1, 1});
  EXPECT_EQ(leg.params, legendre_params());
  EXPECT_EQ(leg.M, Rat(16));
  EXPECT_EQ(leg.d_mult, (std::map<std::int64_t, int>{{1, 2}}));
}

TEST(Params, FromCyclotomicErrors) {
  EXPECT_ERROR_KIND(params_from_cyclotomic({2}, {2}), ErrorKind::DegenerateCancellation);
  EXPECT_ERROR_KIND(params_from_cyclotomic({3}, {1, 1}), ErrorKind::UnbalancedDegrees);
  EXPECT_ERROR_KIND(params_from_cyclotomic({4}, {2, 2}), ErrorKind::NotCoprime);
  EXPECT_ERROR_KIND(params_from_cyclotomic({}, {1}), ErrorKind::BadParameter);
  EXPECT_ERROR_KIND(params_from_cyclotomic({0, 1}, {1}), ErrorKind::BadParameter);
}

TEST(Params, DMultiplicityIsMinOfDivisorCounts) {
  for (const auto& data : catalog()) {
    std::map<std::int64_t, int> expected;
    for (std::int64_t e = 1; e <= 60; ++e) {
      int a = 0, b = 0;
      for (auto v : data.p_list) a += v % e == 0;
      for (auto v : data.q_list) b += v % e == 0;
      if (std::min(a, b) > 0) expected[e] = std::min(a, b);
    }
    EXPECT_EQ(data.d_mult, expected) << data.to_string();
  }
}

TEST(Params, ToCyclotomic) {
  const auto a = cyclotomic_from_params(legendre_params());
  EXPECT_EQ(a.p_list, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(a.q_list, (std::vector<std::int64_t>{1, 1, 1, 1}));
  const auto b = cyclotomic_from_params(hg({fr(1, 3), fr(2, 3)}, {fr(1, 1), fr(1, 1)}));
  EXPECT_EQ(b.p_list, (std::vector<std::int64_t>{3}));
  EXPECT_EQ(b.q_list, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_ERROR_KIND(cyclotomic_from_params(hg({fr(1, 5)}, {fr(1, 1)})),
                    ErrorKind::NotDefinedOverQ);
  EXPECT_FALSE(is_galois_stable({fr(1, 5)}));
  EXPECT_TRUE(is_galois_stable({fr(1, 4), fr(3, 4), fr(1, 2)}));
  for (const auto& data : catalog()) {
    const auto back = cyclotomic_from_params(data.params);
    EXPECT_EQ(back.params, data.params);
    EXPECT_EQ(back.M, data.M);
  }
}

TEST(Params, ParseSpec) {
  const auto a = parse_param_spec("alpha=1/3,2/3 beta=1,1");
  EXPECT_EQ(a.params, hg({fr(1, 3), fr(2, 3)}, {fr(1, 1), fr(1, 1)}));
  ASSERT_TRUE(a.over_q);
  EXPECT_EQ(a.over_q->p_list, (std::vector<std::int64_t>{3}));
  const auto b = parse_param_spec("p=3 q=1,1,1");
  EXPECT_EQ(b.params, a.params);
  const auto c = parse_param_spec("alpha=1/5 beta=1");
  EXPECT_FALSE(c.over_q);
  EXPECT_ERROR_KIND(parse_param_spec("garbage"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_int_list("1,x"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(parse_int_list(""), ErrorKind::ParseError);
  EXPECT_EQ(parse_int_list("6,3,2,1"), (std::vector<std::int64_t>{6, 3, 2, 1}));
}

TEST(Params, SMultiplicity) {
  const auto c = params_from_cyclotomic({3}, {1, 1, 1});
  EXPECT_EQ(s_multiplicity(c, 0, 7), 1);
  EXPECT_EQ(s_multiplicity(c, 2, 7), 0);
  EXPECT_EQ(s_multiplicity(c, 4, 13), 0);
  const auto l = params_from_cyclotomic({2, 2}, {1, 1, 1, 1});
  EXPECT_EQ(s_multiplicity(l, 0, 13), 2);
  EXPECT_EQ(s_multiplicity(l, 6, 13), 0);
  // s(m) is the multiplicity of exp(2 pi i m/(q-1)) in D(X): Phi_e divides D
  // d_mult[e] times where e is the order of m mod (q-1)
  for (const auto& data : catalog()) {
    for (std::int64_t q : {7, 13, 31}) {
      for (std::int64_t m = 0; m < q - 1; ++m) {
        const std::int64_t e = (q - 1) / std::gcd(m, q - 1);
        const auto it = data.d_mult.find(e);
        EXPECT_EQ(s_multiplicity(data, m, q), it == data.d_mult.end() ? 0 : it->second);
      }
    }
  }
}

TEST(Params, LandauBounds) {
  EXPECT_EQ(landau_bound(params_from_cyclotomic({2, 2}, {1, 1, 1, 1})), Rat(2));
  EXPECT_EQ(landau_bound(params_from_cyclotomic({3}, {1, 1, 1})), Rat(1));
  EXPECT_GE(landau_bound(surface_datum()), Rat(2));
  for (const auto& data : catalog()) {
    const auto l = landau_bound(data);
    EXPECT_EQ(l.get_den(), 1);
    EXPECT_EQ(landau_bound(data.params).get_den(), 1);
  }
  // a single parameter pair has no denominator
  EXPECT_EQ(landau_bound(hg({fr(1, 2)}, {fr(1, 1)})), Rat(0));
}

TEST(Params, FactorialRatio) {
  for (const auto& data : catalog()) {
    for (int n = 1; n <= 5; ++n) {
      Rat lhs(1);
      for (const auto& a : data.params.alpha()) lhs *= pochhammer(a.unit_value(), n);
      for (const auto& b : data.params.beta()) lhs /= pochhammer(b.unit_value(), n);
      Rat rhs = rpow(data.M, -n);
      for (auto v : data.p_list) rhs *= factorial(v * n);
      for (auto v : data.q_list) rhs /= factorial(v * n);
      EXPECT_EQ(lhs, rhs) << data.to_string() << " n=" << n;
    }
  }
}

TEST(Hyper, ExponentialSumMatchesDirect) {
  const std::vector<std::pair<std::int64_t, HGParams>> cases{
      {5, hg({fr(1, 2)}, {fr(1, 1)})},
      {5, hg({fr(1, 4)}, {fr(3, 4)})},
      {7, hg({fr(1, 3), fr(2, 3)}, {fr(1, 1), fr(1, 1)})},
      {7, hg({fr(1, 6), fr(1, 2)}, {fr(1, 3), fr(1, 1)})},
      {9, hg({fr(1, 2), fr(1, 2)}, {fr(1, 1), fr(1, 1)})},
  };
  for (const auto& [q, params] : cases) {
    const GaussTable T(FieldTable::build(q));
    const oracle::Field O(q);
    const int sign = T.omega_minus_one_sign(params.beta_weight(q - 1));
    for (Elem t = 1; t < q; ++t) {
      const auto hyp = hyp_exponential_sum(T, params, t);
      EXPECT_EQ(hyp, direct_hyp(O, params, t)) << q << " " << params.to_string();
      EXPECT_EQ(hyp, s_sum(T, params, t) * Rat(sign));
      EXPECT_TRUE(hyp.has_integral_coefficients());
    }
  }
}

TEST(Hyper, ExponentialSumErrors) {
  const GaussTable T(FieldTable::build(7));
  EXPECT_ERROR_KIND(hyp_exponential_sum(T, hg({fr(1, 4)}, {fr(1, 1)}), 1),
                    ErrorKind::BadFieldForParams);
  EXPECT_ERROR_KIND(hyp_exponential_sum(T, hg({fr(1, 2)}, {fr(1, 1)}), 0),
                    ErrorKind::ZeroArgument);
  EXPECT_ERROR_KIND(h_general(T, hg({fr(1, 2)}, {fr(1, 1)}), 0), ErrorKind::ZeroArgument);
  EXPECT_ERROR_KIND(h_general(T, hg({fr(1, 5)}, {fr(1, 1)}), 2), ErrorKind::BadFieldForParams);
}

TEST(Hyper, Inversion) {
  const GaussTable T(FieldTable::build(7));
  const auto& F = T.field();
  for (const auto& params : {hg({fr(1, 3), fr(2, 3)}, {fr(1, 1), fr(1, 2)}),
                             hg({fr(1, 6)}, {fr(1, 2)}), legendre_params()}) {
    std::vector<Frac> a, b;
    for (const auto& x : params.beta()) a.push_back(-x);
    for (const auto& x : params.alpha()) b.push_back(-x);
    const auto flipped = hg(a, b);
    for (Elem t = 1; t < 7; ++t)
      EXPECT_EQ(s_sum(T, params, t), s_sum(T, flipped, F.inv(t))) << params.to_string();
  }
}

TEST(Hyper, Shift) {
  // omega(t)^{mu(q-1)} S(mu + alpha, mu + beta | t) = S(alpha, beta | t) when
  // omega((-1)^d)^{mu(q-1)} = 1, as for q = 5, mu = 1/2, d = 1
  const GaussTable T(FieldTable::build(5));
  const auto params = hg({fr(1, 4)}, {fr(1, 1)});
  const auto shifted = hg({fr(3, 4)}, {fr(1, 2)});
  for (Elem t = 1; t < 5; ++t) {
    const auto lhs = s_sum(T, shifted, t).rotated(T.omega_exponent(t, 2));
    EXPECT_EQ(lhs, s_sum(T, params, t));
  }
  // in general the shift picks up omega((-1)^d)^{mu(q-1)}
  const GaussTable T13(FieldTable::build(13));
  const auto p2 = hg({fr(1, 3), fr(1, 4)}, {fr(1, 1), fr(1, 2)});
  for (std::int64_t mu = 1; mu < 12; ++mu) {
    std::vector<Frac> a, b;
    for (const auto& x : p2.alpha()) a.push_back(x + fr(mu, 12));
    for (const auto& x : p2.beta()) b.push_back(x + fr(mu, 12));
    const auto p2s = hg(a, b);
    for (Elem t = 1; t < 13; ++t) {
      const auto lhs = s_sum(T13, p2s, t).rotated(T13.omega_exponent(t, mu));
      EXPECT_EQ(lhs, s_sum(T13, p2, t));
    }
  }
}

TEST(Hyper, Normalization) {
  for (std::int64_t q : {5, 7, 13}) {
    const GaussTable T(FieldTable::build(q));
    for (const auto& params : {hg({fr(1, 2)}, {fr(1, 1)}), legendre_params()}) {
      CycloNum norm = T.one();
      for (const auto& a : params.alpha()) norm *= T.gauss_inverse(a.times(q - 1));
      for (const auto& b : params.beta()) norm *= T.gauss_inverse(-b.times(q - 1));
      for (Elem t = 1; t < q; ++t)
        EXPECT_EQ(h_general(T, params, t), s_sum(T, params, t) * norm * Rat(-1));
    }
  }
}

TEST(Hyper, LegendreAnchor) {
  const GaussTable T(FieldTable::build(13));
  EXPECT_EQ(reduce_to_rational(h_general(T, legendre_params(), 2)), Rat(6));
  const auto v = h_over_q(T, params_from_cyclotomic({2, 2}, {1, 1, 1, 1}), 2);
  EXPECT_EQ(v.value, Rat(6));
  EXPECT_EQ(v.q, 13);
  EXPECT_EQ(v.provenance, Provenance::OverQFormula);
}

TEST(Hyper, LegendreCurves) {
  const auto data = params_from_cyclotomic({2, 2}, {1, 1, 1, 1});
  for (std::int64_t q : {3, 5, 7, 9, 11, 13, 25, 27}) {
    const GaussTable T(FieldTable::build(q));
    const oracle::Field O(q);
    const int sign = ((q - 1) / 2) % 2 ? -1 : 1;
    for (Elem lam = 2; lam < q; ++lam) {
      const Rat expected = Rat(sign * (q + 1 - oracle::legendre(O, lam)));
      EXPECT_EQ(h_over_q(T, data, lam).value, expected) << q << " " << lam;
      if (legendre_params().fits_field(q - 1))
        EXPECT_EQ(reduce_to_rational(h_general(T, legendre_params(), lam)), expected);
    }
  }
}

TEST(Hyper, KatzCurves) {
  const auto data = params_from_cyclotomic({3}, {1, 1, 1});
  for (std::int64_t q : {5, 7, 11, 13, 25}) {
    const GaussTable T(FieldTable::build(q));
    const oracle::Field O(q);
    const auto& F = T.field();
    for (Elem lam = 1; lam < q; ++lam) {
      const Elem t = F.mul(F.from_int(27), lam);
      if (t == 1) continue;
      EXPECT_EQ(h_over_q(T, data, t).value, Rat(q + 1 - oracle::katz(O, lam))) << q;
    }
  }
}

TEST(Hyper, RewriteMatchesGeneral) {
  for (const auto& data : catalog()) {
    for (std::int64_t q : prime_powers_upto(31)) {
      if (!admissible(data, q) || !data.params.fits_field(q - 1)) continue;
      const GaussTable T(FieldTable::build(q));
      const GeneralSum general(T, data.params);
      const OverQSum over_q(T, data);
      for (Elem t = 1; t < q; ++t)
        ASSERT_EQ(reduce_to_rational(general.h(t)), over_q.at(t).value)
            << data.to_string() << " q=" << q << " t=" << t;
    }
  }
}

TEST(Hyper, CharacteristicClash) {
  const GaussTable T(FieldTable::build(8));
  EXPECT_ERROR_KIND(h_over_q(T, params_from_cyclotomic({2, 2}, {1, 1, 1, 1}), 1),
                    ErrorKind::CharacteristicClash);
  const GaussTable T9(FieldTable::build(9));
  EXPECT_ERROR_KIND((void)OverQSum(T9, params_from_cyclotomic({3}, {1, 2})),
                    ErrorKind::CharacteristicClash);
}

TEST(Hyper, DenominatorBoundOverQ) {
  for (const auto& data : catalog()) {
    const auto lam = landau_bound(data);
    const Int bound = lam.get_num() - std::min(data.r(), data.s());
    for (std::int64_t q : prime_powers_upto(31)) {
      if (!admissible(data, q)) continue;
      const GaussTable T(FieldTable::build(q));
      const auto [p, f] = *prime_power_decomposition(q);
      const OverQSum sum(T, data);
      for (Elem t = 1; t < q; ++t) {
        const auto v = sum.at(t);
        EXPECT_EQ(v.p_valuation, p_valuation(v.value, p));
        // the value is a rational whose denominator is a power of p
        Int den = v.value.get_den();
        while (den % p == 0) den /= p;
        EXPECT_EQ(den, 1);
        if (v.p_valuation != kInfiniteValuation)
          EXPECT_GE(v.p_valuation, f * bound.get_si()) << data.to_string() << " q=" << q;
      }
    }
  }
}

TEST(Hyper, DenominatorBoundGeneral) {
  const std::vector<std::pair<HGParams, std::vector<std::int64_t>>> cases{
      {hg({fr(1, 5)}, {fr(1, 1)}), {11, 31}},
      {hg({fr(1, 3)}, {fr(1, 2)}), {7, 13}},
      {hg({fr(1, 4), fr(1, 3)}, {fr(1, 2), fr(1, 1)}), {13, 25}},
      {hg({fr(1, 6), fr(1, 2)}, {fr(1, 3), fr(1, 1)}), {7, 13}},
  };
  for (const auto& [params, fields] : cases) {
    const auto lam = landau_bound(params);
    ASSERT_EQ(lam.get_den(), 1);
    for (auto q : fields) {
      const GaussTable T(FieldTable::build(q));
      const GeneralSum sum(T, params);
      const Rat scale(ipow(Int(static_cast<long>(q)), lam.get_num().get_si()));
      for (Elem t = 1; t < q; ++t)
        EXPECT_TRUE((sum.h(t) * scale).has_integral_coefficients())
            << params.to_string() << " q=" << q << " t=" << t;
    }
  }
}

TEST(Hyper, Divisibility) {
  for (std::int64_t q : {7, 13}) {
    const GaussTable T(FieldTable::build(q));
    for (const auto& params : {hg({fr(1, 3), fr(1, 2)}, {fr(1, 6), fr(1, 1)}),
                               hg({fr(1, 4)}, {fr(1, 3)}), legendre_params()}) {
      if (!params.fits_field(q - 1)) continue;
      std::int64_t total = 0;
      CycloNum prod_inv = T.one();
      for (int i = 0; i < params.d(); ++i) {
        const auto diff = params.alpha()[i].times(q - 1) - params.beta()[i].times(q - 1);
        total += diff;
        prod_inv *= T.gauss_inverse(diff);
      }
      const GeneralSum sum(T, params);
      for (std::int64_t m = 0; m < q - 1; ++m) {
        const auto& term = sum.coefficient(m);
        EXPECT_TRUE((term * T.gauss_inverse(total)).has_integral_coefficients());
        EXPECT_TRUE((term * prod_inv).has_integral_coefficients());
      }
    }
  }
}

TEST(Hyper, RationalityOverCyclotomicSubfield) {
  // sum (alpha_i - beta_i) in Z: S_q is fixed by zeta_p -> zeta_p^g
  const GaussTable T(FieldTable::build(13));
  const auto params = hg({fr(1, 3), fr(2, 3)}, {fr(1, 4), fr(3, 4)});
  for (std::int64_t g = 2; g < 13; ++g) {
    const auto k = zeta_p_automorphism(T, g);
    for (Elem t = 1; t < 13; ++t) EXPECT_EQ(s_sum(T, params, t).galois(k), s_sum(T, params, t));
  }
}

TEST(Hyper, GeneratorAndCharacterIndependence) {
  for (std::int64_t q : {7, 13}) {
    const auto F = FieldTable::build(q);
    for (const auto& data : catalog()) {
      if (!admissible(data, q)) continue;
      const GaussTable base(F);
      const OverQSum reference(base, data);
      for (Elem g = 2; g < q; ++g) {
        if (!F.is_primitive(g)) continue;
        const GaussTable other(F.with_generator(g));
        const OverQSum sum(other, data);
        for (Elem t = 1; t < q; ++t) EXPECT_EQ(sum.at(t).value, reference.at(t).value);
      }
      for (Elem c = 2; c < q; ++c) {
        const GaussTable scaled(F, c);
        const OverQSum sum(scaled, data);
        for (Elem t = 1; t < q; ++t) EXPECT_EQ(sum.at(t).value, reference.at(t).value);
      }
    }
  }
}

TEST(Hyper, GreeneFactor) {
  const GaussTable T(FieldTable::build(5));
  const auto params = hg({fr(1, 2)}, {fr(1, 1)});
  // omega(-1)^{|beta|(q-1)} q^{-1} J(2, 0) with J through three Gauss sums
  const auto via_jacobi = T.jacobi_sum(2, 0) * Rat(1, 5);
  const auto via_gauss = T.gauss_sum(2) * T.gauss_sum(0) * T.gauss_inverse(2) * Rat(1, 5);
  EXPECT_EQ(greene_factor(T, params), via_jacobi);
  EXPECT_EQ(greene_factor(T, params), via_gauss);
  for (Elem t = 1; t < 5; ++t)
    EXPECT_EQ(greene_value(T, params, t), greene_factor(T, params) * h_general(T, params, t));

  const GaussTable T13(FieldTable::build(13));
  for (Elem t = 2; t < 13; ++t) {
    const auto v = greene_value(T13, legendre_params(), t);
    const auto r = v.as_rational();
    ASSERT_TRUE(r);
    EXPECT_EQ(Int(169) % r->get_den(), 0);
  }
}
