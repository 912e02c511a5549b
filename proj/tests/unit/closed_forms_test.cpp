#include <gtest/gtest.h>

#include <numbers>

#include "generators.hpp"
#include "hb/closed_forms.hpp"
#include "hb/errors.hpp"
#include "oracles.hpp"

namespace {

using hb::cd;
using hb::SmirnovSymbol;

double basis_gap(const hb::OrthoBasis<cd>& a, const hb::OrthoBasis<cd>& b) {
  double g = 0.0;
  for (std::size_t i = 0; i < std::min(a.polys.size(), b.polys.size()); ++i) {
    g = std::max(g, hbtest::max_gap(a.polys[i].coefficients.coeffs, b.polys[i].coefficients.coeffs));
  }
  return g;
}

TEST(DetectRationalAb, SarasonQualifies) {
  const auto form = hb::detect_rational_ab(SmirnovSymbol::simple_pole(-1.0, 2.0));
  ASSERT_TRUE(form);
  EXPECT_EQ(form->A, cd(-1.0));
  EXPECT_EQ(form->B, cd(2.0));
}

TEST(DetectRationalAb, RejectsNonQualifying) {
  EXPECT_FALSE(hb::detect_rational_ab(SmirnovSymbol::simple_pole(0.0, 1.0)));
  EXPECT_FALSE(hb::detect_rational_ab(hb::blaschke_entry(0.5).phi));
  EXPECT_FALSE(hb::detect_rational_ab(SmirnovSymbol(-1.0, {{2.0, -1.0, 1}})));
  EXPECT_FALSE(hb::detect_rational_ab(SmirnovSymbol::pole_at_one({-1.0, 2.0, 1.0})));
  EXPECT_FALSE(hb::detect_rational_ab(hb::power_entry(2).phi));
}

TEST(DetectRationalAb, BlaschkeFamilyOnlyAtZero) {
  for (double c : {-0.9, -0.5, 0.0, 0.3, 0.9}) {
    EXPECT_EQ(hb::detect_rational_ab(hb::blaschke_entry(c).phi).has_value(), c == 0.0) << c;
  }
}

TEST(DetectRationalAb, RotatedSymbolQualifiesAfterRotatingBack) {
  const auto phi = hb::rotate_symbol(SmirnovSymbol::simple_pole(cd(0, 1), cd(0, -2)), 0.8);
  EXPECT_FALSE(hb::detect_rational_ab(phi));
  EXPECT_TRUE(hb::detect_rational_ab(hb::rotate_symbol(phi, -0.8)));
}

TEST(RationalAbBasis, SarasonFamily) {
  const auto basis = hb::rational_ab_basis({-1.0, 2.0}, 3);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(hbtest::max_gap(basis.polys[0].coefficients.coeffs, {s}), 1e-16);
  EXPECT_LT(hbtest::max_gap(basis.polys[1].coefficients.coeffs, {-0.5, 0.5}), 1e-16);
  EXPECT_LT(hbtest::max_gap(basis.polys[3].coefficients.coeffs, {0, 0, -0.5, 0.5}), 1e-16);
}

TEST(RationalAbBasis, ImaginaryA) {
  const hb::RationalABForm form{cd(0, 1), cd(0, -2)};
  ASSERT_TRUE(form.satisfies_theorem());
  EXPECT_NEAR(form.norm_q0(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(form.norm_qn(), 2.0, 1e-15);
  const auto phi = SmirnovSymbol::simple_pole(form.A, form.B);
  EXPECT_NEAR(hb::hb_norm_squared(phi, hb::PolyVec{{1.0}}), 2.0, 1e-14);
  EXPECT_NEAR(hb::hb_norm_squared(phi, hb::PolyVec{{-1.0, 1.0}}), 4.0, 1e-14);
}

TEST(RationalAbBasis, NormEqualsModulusOfB) {
  const hb::RationalABForm form{2.0, -2.5};
  ASSERT_TRUE(form.satisfies_theorem());
  EXPECT_NEAR(form.norm_qn(), 2.5, 1e-15);
  EXPECT_NEAR(form.norm_qn(), std::abs(form.B), 1e-15);
}

TEST(RationalAbBasis, RejectsInadmissible) {
  EXPECT_THROW(hb::rational_ab_basis({0.0, 1.0}, 3), hb::PreconditionViolated);
  EXPECT_THROW(hb::rational_ab_basis({1.0, 1.0}, 3), hb::PreconditionViolated);
}

TEST(RationalAbBasis, RandomAdmissibleNormsAndOracle) {
  hbtest::SplitMix g(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, b] = hbtest::admissible_pair(g);
    const hb::RationalABForm form{a, b};
    ASSERT_TRUE(form.satisfies_theorem());
    const auto phi = SmirnovSymbol::simple_pole(a, b);
    const double q0 = 1.0 + 1.0 / std::norm(a);
    const double qn = std::pow(std::abs(a) + 1.0 / std::abs(a), 2);
    EXPECT_NEAR(hb::hb_norm_squared(phi, hb::PolyVec{{1.0}}), q0, 1e-10 * q0);
    EXPECT_NEAR(hb::hb_norm_squared(phi, hb::PolyVec{{0.0, -1.0, 1.0}}), qn, 1e-10 * qn);
    EXPECT_LT(basis_gap(hb::rational_ab_basis(form, 32), hb::orthobasis(phi, 32, hb::Precision::f64)), 1e-9);
  }
}

TEST(PowerBasis, NOneIsSarason) {
  EXPECT_LT(basis_gap(hb::power_basis(1, 10), hb::rational_ab_basis({-1.0, 2.0}, 10)), 1e-16);
}

TEST(PowerBasis, NTwoFirstMembers) {
  const auto basis = hb::power_basis(2, 3);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(hbtest::max_gap(basis.polys[0].coefficients.coeffs, {s}), 1e-16);
  EXPECT_LT(hbtest::max_gap(basis.polys[1].coefficients.coeffs, {0, s}), 1e-16);
  EXPECT_LT(hbtest::max_gap(basis.polys[2].coefficients.coeffs, {-0.5, 0, 0.5}), 1e-16);
  EXPECT_LT(hbtest::max_gap(basis.polys[3].coefficients.coeffs, {0, -0.5, 0, 0.5}), 1e-16);
}

TEST(PowerBasis, OrthonormalUnderQuotient) {
  for (int N = 1; N <= 4; ++N) {
    const auto basis = hb::power_basis(N, 24);
    EXPECT_LT(basis.residual, 1e-12);
    for (const auto& p : basis.polys) EXPECT_NEAR(hb::hb_norm_squared(basis.symbol, p.coefficients), 1.0, 1e-12);
    EXPECT_LT(basis_gap(basis, hb::orthobasis(hb::power_entry(N).phi, 24, hb::Precision::f64)), 1e-9) << N;
  }
}

TEST(ComposeBasis, NOneIsIdentity) {
  const auto base = hb::orthobasis(SmirnovSymbol::simple_pole(0.0, 1.0), 5);
  EXPECT_EQ(basis_gap(hb::compose_basis(base, 1), base), 0.0);
}

TEST(ComposeBasis, SarasonGivesPowerBasis) {
  const auto base = hb::rational_ab_basis({-1.0, 2.0}, 8);
  for (int N = 1; N <= 4; ++N) {
    const auto composed = hb::compose_basis(base, N);
    EXPECT_EQ(composed.polys.size(), static_cast<std::size_t>(N) * 9);
    EXPECT_LT(basis_gap(composed, hb::power_basis(N, composed.polys.back().degree)), 1e-15);
  }
}

TEST(ComposeBasis, CauchyAgreesWithOracleOnComposedSymbol) {
  const auto base = hb::orthobasis(SmirnovSymbol::simple_pole(0.0, 1.0), 8);
  for (int N : {2, 3}) {
    const auto composed = hb::compose_basis(base, N);
    const std::size_t top = std::min<std::size_t>(16, composed.polys.back().degree);
    const auto oracle = hb::orthobasis(hb::compose_monomial(SmirnovSymbol::simple_pole(0.0, 1.0), N), top);
    EXPECT_LT(basis_gap(composed, oracle), 1e-9);
  }
}

TEST(FmCoefficients, OddFibonacci) {
  // F_1, F_2, ...
  const double fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610};
  for (std::size_t k = 0; 2 * k + 1 < 15; ++k) {
    const double a = hb::fm_coefficient(k);
    EXPECT_NEAR(a, fib[2 * k], 1e-9);
    EXPECT_NEAR(a, std::round(a), 1e-9);
  }
  EXPECT_EQ(std::round(hb::fm_coefficient(1)), 2.0);
}

TEST(FmPolynomial, FirstMembers) {
  EXPECT_EQ(hb::fm_polynomial(0).coeffs, std::vector<cd>{1.0});
  EXPECT_LT(hbtest::max_gap(hb::fm_polynomial(2).coeffs, {0.0, -1.0, 2.0}), 1e-12);
}

TEST(FmPolynomial, ParsevalInSarasonBasis) {
  const auto phi = hb::sarason_half().phi;
  const auto gram = hb::gram_matrix(phi, 12);
  const auto basis = hb::rational_ab_basis({-1.0, 2.0}, 12);
  for (std::size_t n = 0; n <= 12; ++n) {
    auto q = hb::fm_polynomial(n);
    q.coeffs.resize(13, cd(0.0));
    double energy = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      auto p = basis.polys[k].coefficients;
      p.coeffs.resize(13, cd(0.0));
      energy += std::norm(hb::inner_product(gram, q, p));
    }
    const double norm = hb::fm_norm_squared_sum(n);
    EXPECT_NEAR(energy, norm, 1e-9 * norm) << n;
  }
}

TEST(FmNorm, ThreeEvaluationsAgree) {
  const auto phi = hb::sarason_half().phi;
  EXPECT_NEAR(hb::fm_norm_b(0), std::sqrt(2.0), 1e-15);
  for (std::size_t n = 0; n <= 20; ++n) {
    const double sum = hb::fm_norm_squared_sum(n);
    EXPECT_NEAR(hb::fm_norm_squared_closed(n), sum, 1e-10 * sum);
    EXPECT_NEAR(hb::hb_norm_squared(phi, hb::fm_polynomial(n)), sum, 1e-9 * sum);
  }
}

TEST(FmNorm, MonotoneWithGoldenRatioGrowth) {
  const double square = std::pow((3.0 + std::sqrt(5.0)) / 2.0, 2);
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_GT(hb::fm_norm_b(n), hb::fm_norm_b(n - 1));
  const double ratio = hb::fm_norm_squared_sum(25) / hb::fm_norm_squared_sum(24);
  EXPECT_NEAR(ratio, square, 0.01 * square);
}

TEST(FmNorm, AsymptoticConstant) {
  EXPECT_NEAR(hb::fm_asymptotic_constant(), 0.5981, 1e-4);
  const double growth = (3.0 + std::sqrt(5.0)) / 2.0;
  const double ratio = hb::fm_norm_b(30) / std::pow(growth, 30);
  EXPECT_NEAR(ratio, hb::fm_asymptotic_constant(), 0.01 * hb::fm_asymptotic_constant());
}

TEST(MonomialWitness, Examples) {
  const auto w = hb::monomial_orthogonality_witness(SmirnovSymbol::simple_pole(-1.0, 2.0), 8);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_FALSE(hb::monomial_orthogonality_witness(hb::TaylorStream::from_polynomial({0.0, 0.0, 0.3}), 40));
  EXPECT_FALSE(hb::monomial_orthogonality_witness(SmirnovSymbol(), 20));
  EXPECT_THROW(hb::monomial_orthogonality_witness(SmirnovSymbol(), 0), hb::PreconditionViolated);
}

TEST(MonomialWitness, EveryCatalogEntryWithinEight) {
  for (const auto& e : hb::catalog()) {
    const auto w = hb::monomial_orthogonality_witness(e.phi, 8);
    ASSERT_TRUE(w) << e.name;
    EXPECT_LT(w->first, w->second);
    EXPECT_LE(w->second, 8u);
  }
}

}  // namespace
