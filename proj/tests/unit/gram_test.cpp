#include <gtest/gtest.h>

#include "generators.hpp"
#include "hb/closed_forms.hpp"
#include "hb/errors.hpp"
#include "hb/gram.hpp"
#include "oracles.hpp"

namespace {

using hb::cd;
using hb::PolyVec;
using hb::SmirnovSymbol;

const SmirnovSymbol kSarason = SmirnovSymbol::simple_pole(-1.0, 2.0);

hb::CatalogEntry hardy_entry() {
  hb::CatalogEntry e;
  e.name = "hardy";
  e.b = {{0.0}, {1.0}};
  e.a = {{1.0}, {1.0}};
  return e;
}

PolyVec random_poly(hbtest::SplitMix& g, std::size_t degree) {
  PolyVec p;
  p.coeffs = g.complex_vector(degree + 1, 1.0);
  return p;
}

TEST(MonomialInner, SarasonValues) {
  EXPECT_EQ(hb::monomial_inner(kSarason, 0, 0), cd(2.0));
  EXPECT_EQ(hb::monomial_inner(kSarason, 0, 1), cd(2.0));
  EXPECT_EQ(hb::monomial_inner(kSarason, 1, 1), cd(6.0));
}

TEST(MonomialInner, HardySpaceIsKronecker) {
  const SmirnovSymbol zero;
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(hb::monomial_inner(zero, j, k), cd(j == k ? 1.0 : 0.0));
  }
}

TEST(MonomialInner, SinglePoleOffDiagonalFormula) {
  hbtest::SplitMix g(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [a, b] = hbtest::simple_pole_pair(g);
    const auto phi = SmirnovSymbol::simple_pole(a, b);
    for (std::size_t j = 0; j < 6; ++j) {
      for (std::size_t k = j + 1; k < 9; ++k) {
        const cd expected = std::conj(a) * b + std::norm(b) * static_cast<double>(1 + j);
        EXPECT_LE(std::abs(hb::monomial_inner(phi, j, k) - expected), 1e-12 * (1 + std::abs(expected)));
      }
    }
  }
}

TEST(MonomialInner, AgreesWithToeplitzNorm) {
  hbtest::SplitMix g(17);
  for (int trial = 0; trial < 10; ++trial) {
    const SmirnovSymbol phi(g.box(1.0), {{g.box(1.0) + 0.3, g.unimodular(), 1 + static_cast<int>(g.below(3))}});
    for (std::size_t j = 0; j < 10; ++j) {
      for (std::size_t k = 0; k < 10; ++k) {
        const cd ref = hbtest::toeplitz_monomial_inner(phi, j, k);
        EXPECT_LE(std::abs(hb::monomial_inner(phi, j, k) - ref), 1e-11 * (1 + std::abs(ref)));
      }
    }
  }
}

TEST(GramMatrix, HardyIdentity) {
  const auto m = hb::gram_matrix(SmirnovSymbol(), 3);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(m(j, k), cd(j == k ? 1.0 : 0.0));
  }
}

TEST(GramMatrix, SarasonTwoByTwo) {
  const auto m = hb::gram_matrix(kSarason, 1);
  EXPECT_EQ(m(0, 0), cd(2.0));
  EXPECT_EQ(m(0, 1), cd(2.0));
  EXPECT_EQ(m(1, 0), cd(2.0));
  EXPECT_EQ(m(1, 1), cd(6.0));
}

TEST(GramMatrix, SystemMatrixIsTranspose) {
  const auto m = hb::gram_matrix(SmirnovSymbol::simple_pole(cd(0.3, 1.0), cd(-1.0, 0.5)), 5);
  const auto g = m.system_matrix();
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(g(j, k), m(k, j));
  }
}

TEST(GramMatrix, MatchesPointwiseFormula) {
  hbtest::SplitMix g(2);
  const SmirnovSymbol phi(g.box(1.0), {{g.box(1.0), g.unimodular(), 2}, {g.box(1.0), g.unimodular(), 1}});
  const auto m = hb::gram_matrix(phi, 30);
  for (std::size_t j = 0; j <= 30; ++j) {
    for (std::size_t k = 0; k <= 30; ++k) {
      const cd ref = hb::monomial_inner(phi, j, k);
      EXPECT_LE(std::abs(m(j, k) - ref), 1e-12 * (1 + std::abs(ref)));
    }
  }
}

TEST(GramMatrix, SinglePoleShiftIdentity) {
  hbtest::SplitMix g(31);
  for (int trial = 0; trial < 5; ++trial) {
    const auto [a, b] = hbtest::simple_pole_pair(g);
    const auto m = hb::gram_matrix(SmirnovSymbol::simple_pole(a, b), 65);
    for (std::size_t j = 0; j < 64; ++j) {
      for (std::size_t k = j + 1; k <= 64; ++k) {
        EXPECT_LE(std::abs(m(j, k + 1) - m(j, k)), 1e-12 * std::abs(m(j, k))) << j << "," << k;
      }
    }
  }
}

TEST(GramMatrix, HermitianPositiveDefiniteForCatalog) {
  for (const auto& e : hb::catalog()) {
    const auto m = hb::gram_matrix(e.phi, 128);
    for (std::size_t j = 0; j <= 128; ++j) {
      EXPECT_GE(m(j, j).real(), 1.0);
      EXPECT_EQ(m(j, j).imag(), 0.0);
      for (std::size_t k = 0; k < j; ++k) ASSERT_EQ(m(j, k), std::conj(m(k, j))) << e.name;
    }
    EXPECT_NO_THROW(hb::Cholesky<cd>(m.entries())) << e.name;
  }
}

TEST(GramMatrix, HighPrecisionAgrees) {
  const auto phi = SmirnovSymbol::pole_at_one({0.5, -1.0, 2.0});
  const auto lo = hb::gram_matrix(phi, 20);
  const auto hi = hb::gram_matrix_as<hb::hp_complex>(phi, 20);
  for (std::size_t j = 0; j <= 20; ++j) {
    for (std::size_t k = 0; k <= 20; ++k) {
      EXPECT_LE(std::abs(lo(j, k) - hb::num::to_cd(hi(j, k))), 1e-12 * std::abs(lo(j, k)));
    }
  }
}

TEST(ToeplitzConjApply, ConstantPicksPhiZero) {
  const auto t = hb::toeplitz_conj_apply(SmirnovSymbol::simple_pole(cd(0.5, 1.0), cd(0.0, 2.0)), PolyVec{{1.0}});
  ASSERT_EQ(t.coeffs.size(), 1u);
  EXPECT_EQ(t.coeffs[0], std::conj(cd(0.5, 3.0)));
}

TEST(ToeplitzConjApply, SarasonExamples) {
  const auto z2 = hb::toeplitz_conj_apply(kSarason, PolyVec{{0.0, 0.0, 1.0}});
  EXPECT_EQ(z2.coeffs, (std::vector<cd>{2.0, 2.0, 1.0}));
  const auto lin = hb::toeplitz_conj_apply(kSarason, PolyVec{{-1.0, 1.0}});
  EXPECT_EQ(lin.coeffs, (std::vector<cd>{1.0, 1.0}));
}

TEST(HbNorm, SarasonBasisVectorHasUnitNorm) {
  EXPECT_NEAR(hb::hb_norm_squared(kSarason, PolyVec{{-0.5, 0.5}}), 1.0, 1e-15);
}

TEST(HbNorm, MonomialsInHardySpace) {
  for (std::size_t k = 0; k < 6; ++k) {
    PolyVec p{std::vector<cd>(k + 1, 0.0)};
    p.coeffs[k] = 1.0;
    EXPECT_EQ(hb::hb_norm_squared(SmirnovSymbol(), p), 1.0);
  }
}

TEST(HbNorm, RationalAbFamilyNorm) {
  hbtest::SplitMix g(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [a, b] = hbtest::admissible_pair(g);
    const auto phi = SmirnovSymbol::simple_pole(a, b);
    const double expected = std::pow(std::abs(a) + 1.0 / std::abs(a), 2);
    for (std::size_t n = 1; n < 6; ++n) {
      PolyVec q{std::vector<cd>(n + 1, 0.0)};
      q.coeffs[n] = 1.0;
      q.coeffs[n - 1] = -1.0;
      EXPECT_NEAR(hb::hb_norm_squared(phi, q), expected, 1e-10 * expected);
    }
  }
}

TEST(HbNorm, QuadraticFormConsistency) {
  hbtest::SplitMix g(1234);
  for (const auto& e : hb::catalog()) {
    const auto m = hb::gram_matrix(e.phi, 32);
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = random_poly(g, g.below(33));
      const double direct = hb::hb_norm_squared(e.phi, p);
      const double form = hb::quadratic_form(m, p);
      EXPECT_LE(std::abs(direct - form), 1e-10 * (1.0 + direct)) << e.name;
    }
  }
}

TEST(InnerProduct, ConjugateLinearInSecondArgument) {
  const auto m = hb::gram_matrix(SmirnovSymbol::simple_pole(cd(0.2, 0.4), cd(1.0, -1.0)), 4);
  hbtest::SplitMix g(6);
  const auto p = random_poly(g, 4);
  const auto q = random_poly(g, 3);
  const cd s(0.3, -2.0);
  PolyVec sq = q;
  for (auto& c : sq.coeffs) c *= s;
  const cd base = hb::inner_product(m, p, q);
  EXPECT_LE(std::abs(hb::inner_product(m, p, sq) - std::conj(s) * base), 1e-12 * std::abs(base));
  EXPECT_LE(std::abs(hb::inner_product(m, q, p) - std::conj(base)), 1e-12 * std::abs(base));
  EXPECT_THROW(hb::inner_product(m, random_poly(g, 6), q), hb::PreconditionViolated);
}

TEST(KernelTruncation, ConstantAtOriginDecays) {
  const auto e = hb::sarason_half();
  EXPECT_LT(hb::kernel_truncation_check(e, 0.0, PolyVec{{1.0}}, 60), 1e-8);
  EXPECT_LT(hb::kernel_truncation_check(e, 0.0, PolyVec{{0.0, 1.0}}, 60), 1e-8);
}

TEST(KernelTruncation, DecaysOffOrigin) {
  hbtest::SplitMix g(10);
  for (const auto& e : hb::catalog()) {
    const cd w(0.3, -0.2);
    const auto p = random_poly(g, 4);
    const double coarse = hb::kernel_truncation_check(e, w, p, 8);
    const double fine = hb::kernel_truncation_check(e, w, p, 80);
    EXPECT_LT(fine, 1e-8) << e.name;
    EXPECT_LE(fine, coarse + 1e-12) << e.name;
  }
}

TEST(KernelTruncation, HardySpaceBound) {
  hbtest::SplitMix g(12);
  const auto e = hardy_entry();
  for (int trial = 0; trial < 10; ++trial) {
    const cd w = g.disc(0.9);
    const auto p = random_poly(g, 5);
    double norm = 0.0;
    for (const auto& c : p.coeffs) norm += std::norm(c);
    for (std::size_t K : {5u, 10u, 20u}) {
      const double bound = std::pow(std::abs(w), static_cast<double>(K + 1)) * std::sqrt(norm) + 1e-13;
      EXPECT_LE(hb::kernel_truncation_check(e, w, p, K), bound);
    }
  }
}

TEST(KernelTruncation, RejectsBadArguments) {
  const auto e = hb::sarason_half();
  EXPECT_THROW(hb::kernel_truncation_check(e, 1.0, PolyVec{{1.0}}, 10), hb::PreconditionViolated);
  EXPECT_THROW(hb::kernel_truncation_check(e, 0.1, PolyVec{{1.0, 1.0, 1.0}}, 1), hb::PreconditionViolated);
}

TEST(MonomialWitness, CatalogSymbolsHaveNonOrthogonalPair) {
  for (const auto& e : hb::catalog()) {
    bool found = false;
    for (std::size_t k = 1; k <= 8 && !found; ++k) {
      for (std::size_t j = 0; j < k && !found; ++j) found = std::abs(hb::monomial_inner(e.phi, j, k)) > 1e-9;
    }
    EXPECT_TRUE(found) << e.name;
  }
}

}  // namespace
