#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "reflectlab/chain.hpp"
#include "reflectlab/k_matrix.hpp"
#include "reflectlab/qkz.hpp"
#include "reflectlab/residual.hpp"
#include "reflectlab/rng.hpp"
#include "reflectlab/transfer.hpp"

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

SpinChain chain_for(int n, int N, std::uint64_t seed = 42) {
  ChainConfig cfg;
  cfg.n = n;
  cfg.N = N;
  cfg.q = kGenericQ;
  cfg.seed = seed;
  return make_chain(cfg);
}

struct BoundaryData {
  KMatrixDatum plus;
  KMatrixDatum minus;
};

BoundaryData boundary_for(const SpinChain& ch) {
  return {make_K_plus(ch.R, generic_plus(ch.n())),
          make_K_minus(ch.R, generic_minus(ch.n()))};
}

}  // namespace

TEST(TransportPeriodic, SingleSiteIsTwist) {
  ChainConfig cfg;
  cfg.n = 2;
  cfg.N = 1;
  cfg.q = kGenericQ;
  cfg.twist = {Cplx(1.7, 0.1), Cplx(0.3, -0.8)};
  const SpinChain ch = make_chain(cfg);
  const Cplx p = ch.cfg.sqrt_p * ch.cfg.sqrt_p;
  const TensorOperator a = transport_periodic(ch, 1, p);
  EXPECT_LT((a.entries() - ch.D.entries()).norm(), 1e-15);
  EXPECT_THROW(transport_periodic(ch, 2, p), std::invalid_argument);
  EXPECT_THROW(transport_periodic(ch, 0, p), std::invalid_argument);
}

TEST(TransportPeriodic, ConsistencyAtGenericShift) {
  for (int N : {2, 3}) {
    const SpinChain ch = chain_for(2, N);
    const Cplx p = ch.cfg.sqrt_p * ch.cfg.sqrt_p;
    double worst = 0.0;
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        worst = std::max(worst,
                         transport_consistency_periodic(ch, i, j, p).relative);
    EXPECT_LT(worst, 1e-9) << "N=" << N;
  }
}

TEST(TransportPeriodic, ScatteringMatricesCommuteAtUnitShift) {
  const SpinChain ch = chain_for(2, 3);
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      worst = std::max(worst,
                       commutator_residual(transport_periodic(ch, i, Cplx(1.0)),
                                           transport_periodic(ch, j, Cplx(1.0)))
                           .relative);
  EXPECT_LT(worst, 1e-9);
}

TEST(TransportBoundary, SingleSiteIsKPlusTimesKMinus) {
  const SpinChain ch = chain_for(2, 1);
  const BoundaryData b = boundary_for(ch);
  const Cplx sqrt_p = ch.cfg.sqrt_p;
  const TensorOperator a =
      transport_boundary(ch, b.plus.K, b.minus.K, 1, sqrt_p);
  const TensorOperator want = b.plus.K(sqrt_p * ch.z(1)) * b.minus.K(ch.z(1));
  EXPECT_LT(equation_residual(a, want).relative, 1e-14);
}

TEST(TransportBoundary, ConsistencyAtGenericShift) {
  for (int N : {2, 3}) {
    const SpinChain ch = chain_for(2, N);
    const BoundaryData b = boundary_for(ch);
    double worst = 0.0;
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        worst = std::max(worst, transport_consistency_boundary(
                                    ch, b.plus.K, b.minus.K, i, j, ch.cfg.sqrt_p)
                                    .relative);
    EXPECT_LT(worst, 1e-9) << "N=" << N;
  }
}

TEST(TransportBoundary, UnitShiftClosureWithInverses) {
  const SpinChain ch = chain_for(2, 3);
  const BoundaryData b = boundary_for(ch);
  std::vector<TensorOperator> as;
  for (int i = 1; i <= 3; ++i)
    as.push_back(transport_boundary(ch, b.plus.K, b.minus.K, i, Cplx(1.0)));
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      worst = std::max(worst, commutator_residual(as[static_cast<std::size_t>(i)],
                                                  as[static_cast<std::size_t>(j)])
                                  .relative);
      worst = std::max(
          worst, commutator_residual(as[static_cast<std::size_t>(i)],
                                     as[static_cast<std::size_t>(j)].inverse())
                     .relative);
    }
  EXPECT_LT(worst, 1e-9);
}

TEST(Interpolation, PeriodicTransferAtInhomogeneities) {
  const SpinChain ch = chain_for(2, 3);
  const BoundaryData b = boundary_for(ch);
  const InterpolationReport rep =
      interpolation_identities(ch, *b.plus.Kprime, b.plus.K, b.minus.K);
  for (const Residual& r : rep.periodic) EXPECT_LT(r.relative, 1e-9);
}

TEST(Interpolation, BoundaryTransferBothDirections) {
  for (int n : {2, 3}) {
    for (int N = 1; N <= 3; ++N) {
      if (N > max_chain_length(n)) continue;
      const SpinChain ch = chain_for(n, N);
      const BoundaryData b = boundary_for(ch);
      const InterpolationReport rep =
          interpolation_identities(ch, *b.plus.Kprime, b.plus.K, b.minus.K);
      for (const Residual& r : rep.boundary)
        EXPECT_LT(r.relative, 1e-8) << "n=" << n << " N=" << N;
      for (const Residual& r : rep.boundary_inverse)
        EXPECT_LT(r.relative, 1e-8) << "n=" << n << " N=" << N;
    }
  }
}

TEST(Interpolation, RepeatedInhomogeneitiesRejected) {
  ChainConfig cfg;
  cfg.n = 2;
  cfg.N = 2;
  cfg.q = kGenericQ;
  cfg.z = {Cplx(1.2, 0.3), Cplx(1.2, 0.3)};
  EXPECT_THROW(make_chain(cfg), std::invalid_argument);
}

TEST(Shifts, ShiftedTuplesRevalidated) {
  const SpinChain ch = chain_for(2, 2);
  const Cplx p = ch.cfg.sqrt_p * ch.cfg.sqrt_p;
  const SpinChain sh = ch.shifted(1, p);
  EXPECT_NEAR(std::abs(sh.z(1) - p * ch.z(1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sh.z(2) - ch.z(2)), 0.0, 0.0);
  EXPECT_THROW(ch.shifted(5, p), std::invalid_argument);
  // a shift that parks z_1/z_2 on a singular point must be rejected
  ChainConfig bad = ch.cfg;
  bad.z = {ch.z(2) * kGenericQ * kGenericQ, ch.z(2)};
  EXPECT_THROW(validate_inhomogeneities(bad, ch.R), std::invalid_argument);
}
