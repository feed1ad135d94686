#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "reflectlab/k_matrix.hpp"
#include "reflectlab/r_matrix.hpp"
#include "reflectlab/reflection_maps.hpp"
#include "reflectlab/residual.hpp"
#include "reflectlab/rng.hpp"

using namespace reflectlab;

namespace {

const Cplx kGenericQ = 1.1 * std::polar(1.0, 0.37);

KFamilyParams generic_plus(int n) {
  KFamilyParams p;
  p.theta = {1.1, 0.2};
  p.kappa = {0.45, -0.15};
  for (int a = 1; a <= n / 2; ++a)
    p.xi.push_back(1.2 * std::polar(1.0, M_PI * (2.0 * a - 1.0) / 7.0));
  return p;
}

KFamilyParams generic_minus(int n) {
  KFamilyParams p;
  p.theta = {0.7, -0.3};
  p.kappa = {1.3, 0.25};
  for (int a = 1; a <= n / 2; ++a)
    p.xi.push_back(0.8 * std::polar(1.0, M_PI * (3.0 * a - 2.0) / 11.0));
  return p;
}

Cplx sample_phi_safe(SplitMix64& rng, const RMatrixDatum& d) {
  return sample_spectral_point(rng, [&](Cplx x) {
    return d.Rtilde.pole_distance(x * x) < kPoleRejectRadius ||
           d.R.pole_distance(x, true) < kPoleRejectRadius;
  });
}

}  // namespace

TEST(ChiJ, IdentityConjugationIsIdentityMap) {
  const MatrixFunction K = make_K_family(2, generic_plus(2));
  const TensorOperator id = TensorOperator::identity(LegSpace(2, {1}));
  const MatrixFunction mapped = chi_J(K, id);
  const Cplx x(1.3, -0.6);
  EXPECT_EQ((mapped(x).entries() - K(x).entries()).norm(), 0.0);
}

TEST(ChiJ, HandConjugationN2) {
  // J antidiagonal conjugation of [[1,-3],[-6,-2]] gives [[-2,-6],[-3,1]]
  KFamilyParams p;
  p.theta = 1.0;
  p.kappa = 2.0;
  p.xi = {Cplx(1.0)};
  const RMatrixDatum d = make_R(2, Cplx(2.0));
  const MatrixFunction K = make_K_family(2, p);
  const Matrix got = chi_J(K, d.J)(Cplx(2.0)).entries();
  Matrix expect(2, 2);
  expect << Cplx(-2.0), Cplx(-6.0), Cplx(-3.0), Cplx(1.0);
  EXPECT_LT((got - expect).norm(), 1e-14);
}

TEST(ChiJ, SingularJRejected) {
  const MatrixFunction K = make_K_family(2, generic_plus(2));
  EXPECT_THROW(chi_J(K, TensorOperator::zero(LegSpace(2, {1}))),
               std::invalid_argument);
}

TEST(ChiJ, RoundTripExact) {
  SplitMix64 rng(31);
  const RMatrixDatum d = make_R(3, kGenericQ);
  const MatrixFunction K = make_K_family(3, generic_plus(3));
  const TensorOperator jinv(d.J.space(), d.J.entries().inverse());
  const MatrixFunction back = chi_J(chi_J(K, d.J), jinv);
  for (int k = 0; k < 5; ++k) {
    const Cplx x = rng.annulus();
    EXPECT_LT(equation_residual(back(x), K(x)).relative, 1e-14);
  }
}

TEST(ChiJ, MapsLeftSolutionsToRightSolutions) {
  SplitMix64 rng(32);
  for (int n : {2, 3}) {
    const RMatrixDatum d = make_R(n, kGenericQ);
    const MatrixFunction K = make_K_family(n, generic_plus(n));
    const MatrixFunction mapped = chi_J(K, d.J);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Cplx x = rng.annulus(), y = rng.annulus();
      worst = std::max(
          worst, check_reflection(d, mapped, ReflectionKind::RRE, x, y).relative);
    }
    EXPECT_LT(worst, 1e-10);
  }
}

TEST(PsiMr, RoundTrip) {
  SplitMix64 rng(33);
  const RMatrixDatum d = make_R(2, kGenericQ);
  const KMatrixDatum km = make_K_minus(d, generic_minus(2));
  const MatrixFunction fwd = psi_Mr(km.K, d.M, d.r);
  const MatrixFunction back = psi_Mr_inverse(fwd, d.M, d.r);
  for (int k = 0; k < 10; ++k) {
    const Cplx x = sample_spectral_point(rng, [&](Cplx c) {
      return km.K.pole_distance(d.r * c, true) < kPoleRejectRadius ||
             fwd.pole_distance(c / d.r, true) < kPoleRejectRadius;
    });
    EXPECT_LT(equation_residual(back(x), km.K(x)).relative, 1e-10);
  }
}

TEST(PsiMr, TrivialParametersGivePointwiseInverse) {
  const LegSpace one(2, {1});
  Matrix c(2, 2);
  c << Cplx(2.0, 1.0), Cplx(0.5), Cplx(-0.3), Cplx(1.0, -2.0);
  MatrixFunction K(2, 1, [one, c](Cplx) { return TensorOperator(one, c); });
  const MatrixFunction mapped = psi_Mr(K, TensorOperator::identity(one), Cplx(1.0));
  EXPECT_LT((mapped(Cplx(1.7)).entries() - c.inverse()).norm(), 1e-14);
}

TEST(PsiMr, MapsRightSolutionsToDualSolutions) {
  SplitMix64 rng(34);
  for (int n : {2, 3}) {
    const RMatrixDatum d = make_R(n, kGenericQ);
    const KMatrixDatum km = make_K_minus(d, generic_minus(n));
    const MatrixFunction mapped = psi_Mr(km.K, d.M, d.r);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Cplx x = sample_spectral_point(rng, [&](Cplx c) {
        return mapped.pole_distance(c) < kPoleRejectRadius ||
               d.Rtilde.pole_distance(c * c) < kPoleRejectRadius;
      });
      const Cplx y = sample_spectral_point(rng, [&](Cplx c) {
        return mapped.pole_distance(c) < kPoleRejectRadius ||
               d.R.pole_distance(x / c, true) < kPoleRejectRadius ||
               d.Rtilde.pole_distance(x * c) < kPoleRejectRadius ||
               d.Rtilde.pole_distance(c * c) < kPoleRejectRadius;
      });
      worst = std::max(
          worst, check_reflection(d, mapped, ReflectionKind::DRE, x, y).relative);
    }
    EXPECT_LT(worst, 1e-9);
  }
}

TEST(PhiR, RoundTripRecoverKPlus) {
  SplitMix64 rng(35);
  for (int n : {2, 3}) {
    const RMatrixDatum d = make_R(n, kGenericQ);
    const KMatrixDatum kp = make_K_plus(d, generic_plus(n));
    const MatrixFunction back = phi_R(*kp.Kprime, d, /*use_rtilde=*/false);
    for (int k = 0; k < 10; ++k) {
      const Cplx x = sample_phi_safe(rng, d);
      EXPECT_LT(equation_residual(back(x), kp.K(x)).relative, 1e-9);
    }
  }
}

TEST(PhiR, IdentityInputMatchesBruteForceContraction) {
  // phi_R(Id)(x) = Tr_0 P_01 R_01(x^2); cross-checked by elementwise sums
  const RMatrixDatum d = make_R(2, Cplx(2.0));
  const LegSpace one(2, {1});
  MatrixFunction idf(2, 1, [one](Cplx) { return TensorOperator::identity(one); });
  const Cplx x(3.0);
  const Matrix got = phi_R(idf, d)(x).entries();
  const Matrix r = d.R(x * x).entries();
  Matrix want = Matrix::Zero(2, 2);
  // (Tr_0 P_01 R_01(y))[b,c] = sum_a (P R)[(a b),(a c)] = sum_a R[(b a),(a c)]
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      Cplx acc = 0.0;
      for (int a = 0; a < 2; ++a) acc += r(b * 2 + a, a * 2 + c);
      want(b, c) = acc;
    }
  EXPECT_LT((got - want).norm(), 1e-12);
}

TEST(PhiR, Linearity) {
  SplitMix64 rng(36);
  const RMatrixDatum d = make_R(2, kGenericQ);
  const MatrixFunction K1 = make_K_family(2, generic_plus(2));
  const MatrixFunction K2 = make_K_family(2, generic_minus(2));
  const Cplx a(0.7, -1.1), b(-0.4, 0.9);
  MatrixFunction combo(2, 1, [K1, K2, a, b](Cplx x) {
    return a * K1.eval_direct(x) + b * K2.eval_direct(x);
  });
  const MatrixFunction m_combo = phi_R(combo, d);
  const MatrixFunction m1 = phi_R(K1, d);
  const MatrixFunction m2 = phi_R(K2, d);
  for (int k = 0; k < 5; ++k) {
    const Cplx x = rng.annulus();
    const TensorOperator want = a * m1(x) + b * m2(x);
    EXPECT_LT(equation_residual(m_combo(x), want).relative, 1e-12);
  }
}

TEST(PhiR, DegreeHintPropagation) {
  const RMatrixDatum d = make_R(2, kGenericQ);
  const MatrixFunction K = make_K_family(2, generic_plus(2));
  const MatrixFunction mapped = phi_R(K, d);
  ASSERT_TRUE(mapped.degree_hint.has_value());
  EXPECT_EQ(*mapped.degree_hint, 4);  // degree-2 input against degree-1 R(x^2)
  SplitMix64 rng(37);
  EXPECT_LT(degree_check(mapped, 4, rng.annulus()).relative, 1e-9);
}

TEST(BoundaryCrossing, CompositeMatchesDisplayedFormula) {
  SplitMix64 rng(38);
  for (int n : {2, 3}) {
    const RMatrixDatum d = make_R(n, kGenericQ);
    const KMatrixDatum kp = make_K_plus(d, generic_plus(n));
    const MatrixFunction mapped = boundary_crossing(kp.K, d);
    const LegSpace work(n, {0, 1});
    const TensorOperator jinv(d.J.space(), d.J.entries().inverse());
    for (int k = 0; k < 5; ++k) {
      const Cplx x = sample_spectral_point(rng, [&](Cplx c) {
        return mapped.pole_distance(c) < kPoleRejectRadius;
      });
      // Tr_0 J0^-1 K0(rx)^-1 J0 M0 P01 R01(x^2)
      const TensorOperator head =
          embed(jinv * kp.K(d.r * x).inverse() * d.J * d.M, {0}, work);
      const TensorOperator tail =
          embed(d.P, {0, 1}, work) * embed(d.R(x * x), {0, 1}, work);
      const TensorOperator want = partial_trace(head * tail, 0);
      EXPECT_LT(equation_residual(mapped(x), want).relative, 1e-10);
    }
  }
}

TEST(BoundaryCrossing, ImageSatisfiesLeftReflection) {
  SplitMix64 rng(39);
  const RMatrixDatum d = make_R(2, kGenericQ);
  const KMatrixDatum kp = make_K_plus(d, generic_plus(2));
  const MatrixFunction once = boundary_crossing(kp.K, d);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Cplx x = sample_spectral_point(rng, [&](Cplx c) {
      return once.pole_distance(c) < kPoleRejectRadius;
    });
    const Cplx y = sample_spectral_point(rng, [&](Cplx c) {
      return once.pole_distance(c) < kPoleRejectRadius;
    });
    worst = std::max(worst,
                     check_reflection(d, once, ReflectionKind::LRE, x, y).relative);
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(BoundaryCrossing, ClosedUnderIteration) {
  SplitMix64 rng(40);
  const RMatrixDatum d = make_R(2, kGenericQ);
  const KMatrixDatum kp = make_K_plus(d, generic_plus(2));
  const MatrixFunction twice = boundary_crossing(boundary_crossing(kp.K, d), d);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const Cplx x = sample_spectral_point(rng, [&](Cplx c) {
      return twice.pole_distance(c) < kPoleRejectRadius;
    });
    const Cplx y = sample_spectral_point(rng, [&](Cplx c) {
      return twice.pole_distance(c) < kPoleRejectRadius;
    });
    worst = std::max(
        worst, check_reflection(d, twice, ReflectionKind::LRE, x, y).relative);
  }
  EXPECT_LT(worst, 1e-9);
}
