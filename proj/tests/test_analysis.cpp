// Plancherel density, Sato-Tate moments and symmetry types.

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace satake;

namespace {

RootDatum A(int r) { return build_root_datum(CartanType::A, r); }
RootDatum B(int r) { return build_root_datum(CartanType::B, r); }
RootDatum C(int r) { return build_root_datum(CartanType::C, r); }
RootDatum D(int r) { return build_root_datum(CartanType::D, r); }

std::vector<RootDatum> all_supported() {
  std::vector<RootDatum> out;
  for (int r = 1; r <= 6; ++r) out.push_back(A(r));
  for (int r = 1; r <= 4; ++r) out.push_back(B(r));
  for (int r = 1; r <= 4; ++r) out.push_back(C(r));
  for (int r = 2; r <= 4; ++r) out.push_back(D(r));
  for (int n = 2; n <= 5; ++n) out.push_back(build_gl(n));
  return out;
}

}  // namespace

TEST(Plancherel, DensityExamples) {
  EXPECT_EQ(macdonald_density_unnorm(A(1), 3.0, {0.0}), 0.0);
  EXPECT_NEAR(macdonald_density_unnorm(A(1), 4.0, {0.25}), 2.56, 1e-12);
  EXPECT_NEAR(macdonald_density_unnorm(A(1), 1e12, {0.1}), 4 * std::pow(std::sin(2 * std::numbers::pi * 0.1), 2), 1e-9);
  EXPECT_THROW(macdonald_density_unnorm(A(1), 1.0, {0.1}), PreconditionError);
}

TEST(Plancherel, Normalization) {
  PlancherelDensity a1(A(1), 2.0);
  EXPECT_NEAR(a1.unnormalized_mass() * a1.normalization(), 1.0, 1e-12);
  EXPECT_NEAR(normalize(A(1), 1e9), 0.5, 1e-8);
  PlancherelDensity b2(B(2), 3.0);
  PlancherelDensity b2x(B(2), 3.0, 2 * b2.grid().points);
  EXPECT_GT(b2.unnormalized_mass(), 0.0);
  EXPECT_NEAR(b2.unnormalized_mass(), b2x.unnormalized_mass(), 1e-8);
  EXPECT_GE(b2.min_node_value(), -1e-12);
}

TEST(Plancherel, TrivialRepHasUnitMoments) {
  for (const auto& d : {A(2), B(2), C(3)})
    for (double q : {2.0, 5.0}) EXPECT_NEAR(plancherel_moment_numeric(d, RepSpec::trivial(), 3, q), 1.0, 1e-10);
}

TEST(Plancherel, NumericMatchesExactRankFour) {
  for (const auto& d : {B(4), C(4), D(4), A(4)}) {
    SatakeEngine eng(d);
    const auto num = plancherel_moments_numeric(d, RepSpec::standard(), 2, 5.0);
    for (int nu = 1; nu <= 2; ++nu)
      EXPECT_NEAR(num[static_cast<std::size_t>(nu - 1)], to_double(plancherel_moment_exact(eng, RepSpec::standard(), nu, Rational(5))), 1e-7)
          << d.name();
  }
}

TEST(Plancherel, SamplerReproducesMoments) {
  const RootDatum b2 = B(2);
  PlancherelSampler sampler(b2, 3.0);
  const auto w = RepSpec::standard().weights(b2);
  std::mt19937_64 rng(3);
  const int n = 20000;
  double s = 0, ss = 0;
  for (int i = 0; i < n; ++i) {
    double t = 0;
    for (const auto& a : sampler.parameters(w, sampler.sample(rng))) t += a.real();
    s += t;
    ss += t * t;
  }
  const double mean = s / n, se = std::sqrt((ss / n - mean * mean) / n);
  EXPECT_NEAR(mean, 1.0 / 9.0, 4 * se);
}

TEST(Plancherel, Rejections) {
  EXPECT_THROW(plancherel_moment_numeric(B(2), RepSpec::standard(), 0, 3.0), PreconditionError);
  SatakeEngine eng(B(2));
  EXPECT_THROW(plancherel_moment_exact(eng, RepSpec::standard(), 1, Rational(1)), PreconditionError);
  EXPECT_THROW(PlancherelDensity::real_part_checked({1.0, 1e-6}), NumericalError);
}

TEST(SatoTate, ExactMassIsOne) {
  for (const auto& d : all_supported()) {
    EXPECT_EQ(st_mass_exact(d), Rational(1)) << d.name();
    EXPECT_EQ(st_constant_term(d, TorusPoly::one(d)), Rational(1)) << d.name();
  }
}

TEST(SatoTate, MomentExamples) {
  EXPECT_EQ(st_moment_exact(A(2), RepSpec::trivial(), 3), Rational(1));
  EXPECT_EQ(st_moment_exact(A(1), RepSpec::standard(), 2), Rational(-1));
  EXPECT_EQ(st_moment_exact(B(2), RepSpec::standard(), 1), Rational(0));
  EXPECT_NEAR(st_moment_numeric(A(1), RepSpec::standard(), 2), -1.0, 1e-9);
  EXPECT_NEAR(st_moment_numeric(A(1), RepSpec::trivial(), 1), 1.0, 1e-9);
}

TEST(SatoTate, NumericMatchesExact) {
  for (const auto& d : {A(1), A(2), B(2), C(2), B(3), D(3)})
    for (int nu = 1; nu <= 3; ++nu) {
      EXPECT_NEAR(st_moment_numeric(d, RepSpec::standard(), nu), to_double(st_moment_exact(d, RepSpec::standard(), nu)), 1e-9);
      EXPECT_NEAR(st_moment_numeric(d, RepSpec::adjoint(), nu), to_double(st_moment_exact(d, RepSpec::adjoint(), nu)), 1e-9);
    }
}

TEST(SatoTate, ConstantTermFormsAgree) {
  for (const auto& d : {A(2), B(2), C(3), D(3)}) {
    auto chi = character_poly(d, RepSpec::standard());
    auto f = chi * chi;
    EXPECT_EQ(st_constant_term(d, f), st_constant_term_expanded(d, f));
  }
}

TEST(SatoTate, CatalanAndTensorOracle) {
  const RootDatum a1 = A(1);
  const auto w = RepSpec::standard().weights(a1);
  const std::int64_t catalan[] = {1, 0, 1, 0, 2, 0, 5};
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(trace_power_moment_exact(a1, RepSpec::standard(), k), Rational(catalan[k]));
    EXPECT_EQ(oracle::trivial_in_tensor_power(a1, w, k), catalan[k]);
  }
  EXPECT_EQ(trace_power_moment_exact(B(2), RepSpec::standard(), 2), Rational(1));
  EXPECT_EQ(oracle::trivial_in_tensor_power(B(2), RepSpec::standard().weights(B(2)), 2), 1);
  EXPECT_THROW(trace_power_moment_exact(a1, RepSpec::standard(), 9), PreconditionError);
}

TEST(SatoTate, ConvergenceReports) {
  const std::vector<double> qs = {2, 3, 4, 5, 7, 8, 9, 11, 25, 121};
  SatakeEngine b2(B(2));
  for (int nu = 1; nu <= 2; ++nu) {
    const auto rep = convergence_report(b2, RepSpec::standard(), nu, qs);
    EXPECT_TRUE(rep.nonincreasing);
    EXPECT_LE(rep.max_q_diff, 1.0);
  }
  SatakeEngine a1(A(1));
  const auto adj = convergence_report(a1, RepSpec::adjoint(), 1, qs);
  EXPECT_EQ(adj.beta_st, Rational(0));
  EXPECT_EQ(adj.beta_pl_symbolic, HalfPowerLaurent::monomial(-2));  // +1/q
  EXPECT_TRUE(adj.nonincreasing);
  EXPECT_NEAR(adj.max_q_diff, 1.0, 1e-12);
  EXPECT_THROW(convergence_report(a1, RepSpec::adjoint(), 1, {3, 2}), PreconditionError);
}

TEST(Symmetry, IndicatorExamples) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(frobenius_schur(B(n), RepSpec::standard()).s, 1);
    EXPECT_EQ(frobenius_schur(C(n), RepSpec::standard()).s, -1);
  }
  EXPECT_EQ(frobenius_schur(A(2), RepSpec::standard()).s, 0);
  EXPECT_EQ(frobenius_schur(A(1), RepSpec::adjoint()).s, 1);
  EXPECT_EQ(sym2_wedge2_mults(A(2), RepSpec::trivial()), (std::make_pair<std::int64_t, std::int64_t>(1, 0)));
  EXPECT_EQ(sym2_wedge2_mults(A(1), RepSpec::standard()), (std::make_pair<std::int64_t, std::int64_t>(0, 1)));
  EXPECT_EQ(sym2_wedge2_mults(B(2), RepSpec::standard()), (std::make_pair<std::int64_t, std::int64_t>(1, 0)));
}

TEST(Symmetry, Classify) {
  EXPECT_EQ(classify(0).type, SymmetryType::Unitary);
  EXPECT_EQ(classify(0).rmt_ensemble, Ensemble::U);
  EXPECT_EQ(classify(1).type, SymmetryType::Symplectic);
  EXPECT_EQ(classify(1).rmt_ensemble, Ensemble::USp);
  EXPECT_EQ(classify(-1).type, SymmetryType::Orthogonal);
  EXPECT_EQ(classify(-1).rmt_ensemble, Ensemble::SOeven);
  EXPECT_THROW(classify(2), PreconditionError);
  EXPECT_EQ(dyson_beta(Ensemble::USp), 4);
}

TEST(Symmetry, CebotarevAverage) {
  EXPECT_EQ(cebotarev_average({{1, 1}}), Rational(1));
  EXPECT_EQ(cebotarev_average({{1, 1}, {3, -1}, {2, 1}}), Rational(0));
  for (int s : {-1, 0, 1}) EXPECT_EQ(cebotarev_average({{1, s}, {1, s}}), Rational(s));
  EXPECT_THROW(cebotarev_average({}), PreconditionError);
  EXPECT_THROW(cebotarev_average({{0, 1}}), PreconditionError);
}

TEST(Symmetry, ExactTriangleOnRandomHighestWeights) {
  for (const auto& d : {A(1), A(2), B(2), C(2), D(2)}) {
    SatakeEngine eng(d);
    int done = 0;
    for (const auto& lam : check::dominant_weights_in_ball(d, 2)) {
      if (lam == Weight(d.ambient_dim())) continue;
      const RepSpec r = RepSpec::highest_weights({{lam, std::int64_t{1}}});
      const auto fs = frobenius_schur(d, r);
      const auto [sym, wedge] = sym2_wedge2_mults(d, r);
      EXPECT_LE(sym + wedge, 1);
      EXPECT_EQ(fs.s, sym - wedge);
      EXPECT_EQ(st_moment_exact(d, r, 2), Rational(fs.s));
      const auto e = second_moment_expansion(eng, r);
      EXPECT_EQ(e.constant_term, Rational(fs.s)) << d.name() << " " << lam;
      // duality: the negated weight multiset has the same indicator
      WeightMultiset neg;
      for (const auto& [w, m] : r.weights(d)) neg[d.canonical(Frac(-1) * w)] += m;
      EXPECT_EQ(frobenius_schur(d, RepSpec::weight_list(neg)).s, fs.s);
      if (++done == 10) break;
    }
  }
}

TEST(Symmetry, MomentChecks) {
  SatakeEngine b2(B(2)), d3(D(3)), a1(A(1));
  EXPECT_TRUE(first_moment_check(b2, RepSpec::standard()));
  EXPECT_TRUE(first_moment_check(d3, RepSpec::standard()));
  EXPECT_TRUE(first_moment_check(a1, RepSpec::adjoint()));
  EXPECT_THROW(first_moment_check(b2, RepSpec::trivial()), PreconditionError);
  const auto adj = second_moment_expansion(a1, RepSpec::adjoint());
  EXPECT_EQ(adj.constant_term, Rational(1));
  EXPECT_LE(adj.expansion.max_twice_exp(), 0);
  const auto rest = adj.expansion - HalfPowerLaurent(1);
  for (const auto& [k, c] : rest.terms()) EXPECT_LE(k, -2);
}

TEST(Symmetry, ReducibleIsFlagged) {
  const RootDatum b2 = B(2);
  const auto r = RepSpec::highest_weights({{Weight::unit(2, 0), std::int64_t{2}}});
  const auto fs = frobenius_schur(b2, r);
  EXPECT_TRUE(fs.reducible);
  EXPECT_EQ(fs.s, 2);  // linear in the character
  EXPECT_THROW(predicted_limit(PipelineConfig{b2, r}), PreconditionError);
}
