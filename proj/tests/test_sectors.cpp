#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>

#include "reflectlab/chain.hpp"
#include "reflectlab/k_matrix.hpp"
#include "reflectlab/qkz.hpp"
#include "reflectlab/sectors.hpp"
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

}  // namespace

TEST(Sectors, SymmetricOrbitsN2) {
  const auto sectors = enumerate_sectors(2, 2, SectorKind::symmetric);
  ASSERT_EQ(sectors.size(), 3u);
  EXPECT_EQ(sectors[0].representative, (std::vector<int>{1, 1}));
  EXPECT_EQ(sectors[0].members.size(), 1u);
  EXPECT_EQ(sectors[1].representative, (std::vector<int>{1, 2}));
  EXPECT_EQ(sectors[1].members.size(), 2u);
  EXPECT_EQ(sectors[2].representative, (std::vector<int>{2, 2}));
}

TEST(Sectors, HyperoctahedralSingleSiteN2) {
  // the entry flip 1 <-> 2 joins both basis vectors into one orbit
  const auto sectors = enumerate_sectors(2, 1, SectorKind::hyperoctahedral);
  ASSERT_EQ(sectors.size(), 1u);
  EXPECT_EQ(sectors[0].members.size(), 2u);
  EXPECT_EQ(sectors[0].representative, (std::vector<int>{1}));
}

TEST(Sectors, HyperoctahedralMatchesCanonicalFormOracle) {
  // oracle: two tuples share an orbit iff the sorted lists of
  // min(entry, flipped entry) coincide
  for (int n : {2, 3}) {
    for (int N : {1, 2, 3}) {
      const auto sectors = enumerate_sectors(n, N, SectorKind::hyperoctahedral);
      std::map<std::vector<int>, std::set<std::size_t>> groups;
      std::size_t total = 1;
      for (int i = 0; i < N; ++i) total *= static_cast<std::size_t>(n);
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        std::vector<int> canon;
        for (int i = 0; i < N; ++i) {
          const int v = static_cast<int>(rem % static_cast<std::size_t>(n)) + 1;
          rem /= static_cast<std::size_t>(n);
          canon.push_back(std::min(v, n + 1 - v));
        }
        std::sort(canon.begin(), canon.end());
        groups[canon].insert(idx);
      }
      ASSERT_EQ(sectors.size(), groups.size()) << "n=" << n << " N=" << N;
      for (const auto& sec : sectors) {
        std::vector<int> canon;
        for (int v : sec.representative) canon.push_back(std::min(v, n + 1 - v));
        std::sort(canon.begin(), canon.end());
        const auto it = groups.find(canon);
        ASSERT_NE(it, groups.end());
        EXPECT_EQ(std::set<std::size_t>(sec.basis_indices.begin(),
                                        sec.basis_indices.end()),
                  it->second);
      }
    }
  }
}

TEST(Sectors, PartitionIsExact) {
  for (auto kind : {SectorKind::symmetric, SectorKind::hyperoctahedral}) {
    const auto sectors = enumerate_sectors(3, 3, kind);
    std::set<std::size_t> seen;
    std::size_t total = 0;
    for (const auto& s : sectors) {
      total += s.members.size();
      for (std::size_t idx : s.basis_indices) {
        EXPECT_TRUE(seen.insert(idx).second) << "index covered twice";
      }
      EXPECT_EQ(s.members.size(), s.basis_indices.size());
    }
    EXPECT_EQ(total, 27u);
  }
}

TEST(Sectors, BoundaryRepresentativesRespectFoldedRange) {
  const auto sectors = enumerate_sectors(3, 2, SectorKind::hyperoctahedral);
  for (const auto& s : sectors) {
    EXPECT_TRUE(std::is_sorted(s.representative.begin(), s.representative.end()));
    for (int v : s.representative) EXPECT_LE(2 * v, 3 + 1);
  }
}

TEST(BlockInvariance, DiagonalAndFlip) {
  const auto sectors = enumerate_sectors(2, 2, SectorKind::symmetric);
  const LegSpace sp(2, {1, 2});
  Matrix d = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) d(i, i) = Cplx(i + 0.5, -i);
  EXPECT_EQ(block_invariance_defect(TensorOperator(sp, d), sectors), 0.0);
  // the flip permutes within orbits
  EXPECT_EQ(block_invariance_defect(flip(2), sectors), 0.0);
}

TEST(BlockInvariance, ScatteringMatricesPreserveSymmetricSectors) {
  const SpinChain ch = chain_for(2, 3);
  const auto sectors = enumerate_sectors(2, 3, SectorKind::symmetric);
  for (int i = 1; i <= 3; ++i)
    EXPECT_LE(block_invariance_defect(transport_periodic(ch, i, Cplx(1.0)), sectors),
              1e-12);
}

TEST(BlockInvariance, BoundaryTransportPreservesHyperoctahedralSectors) {
  for (int n : {2, 3}) {
    const SpinChain ch = chain_for(n, 2);
    const KMatrixDatum kp = make_K_plus(ch.R, generic_plus(n));
    const KMatrixDatum km = make_K_minus(ch.R, generic_minus(n));
    const auto sectors = enumerate_sectors(n, 2, SectorKind::hyperoctahedral);
    for (int i = 1; i <= 2; ++i) {
      const TensorOperator a = transport_boundary(ch, kp.K, km.K, i, Cplx(1.0));
      EXPECT_LE(block_invariance_defect(a, sectors), 1e-12) << "n=" << n;
      // scale the inverse to unit norm before reading off its off-block mass
      TensorOperator ainv = a.inverse();
      const TensorOperator ainv_unit = (1.0 / ainv.norm()) * ainv;
      EXPECT_LE(block_invariance_defect(ainv_unit, sectors), 1e-12) << "n=" << n;
    }
  }
}

TEST(ScalarEigenvalue, PeriodicKnownValues) {
  // q = 2, D = Id: diagonal entries of R(0) are q off the repeated index,
  // 1 on it, so the eigenvalue on v_beta is sum_a q^(#{i: beta_i != a})
  ChainConfig cfg;
  cfg.n = 2;
  cfg.N = 2;
  cfg.q = Cplx(2.0);
  cfg.z = {Cplx(1.1, 0.2), Cplx(0.8, -0.5)};
  const SpinChain ch{cfg, make_R(2, Cplx(2.0)),
                     TensorOperator::identity(LegSpace(2, {1}))};
  const TensorOperator r0 = ch.R.R(Cplx(0.0));
  EXPECT_NEAR(std::abs(scalar_eigenvalue_periodic(r0, ch.D, {1, 2}) - Cplx(4.0)),
              0.0, 1e-13);
  // beta = (1,...,1): eigenvalue 1 + q^N
  EXPECT_NEAR(std::abs(scalar_eigenvalue_periodic(r0, ch.D, {1, 1}) - Cplx(5.0)),
              0.0, 1e-13);
}

TEST(ScalarEigenvalue, PermutationInvariance) {
  const SpinChain ch = chain_for(3, 3);
  const TensorOperator r0 = ch.R.R(Cplx(0.0));
  const Cplx a = scalar_eigenvalue_periodic(r0, ch.D, {1, 2, 3});
  const Cplx b = scalar_eigenvalue_periodic(r0, ch.D, {3, 1, 2});
  const Cplx c = scalar_eigenvalue_periodic(r0, ch.D, {2, 3, 1});
  EXPECT_NEAR(std::abs(a - b), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(a - c), 0.0, 1e-14);
}

TEST(ScalarEigenvalue, PeriodicMatchesMatrixAtZero) {
  for (int n : {2, 3}) {
    const SpinChain ch = chain_for(n, 2);
    const TensorOperator t0 = transfer_periodic(ch, Cplx(0.0));
    const TensorOperator r0 = ch.R.R(Cplx(0.0));
    const auto sectors = enumerate_sectors(n, 2, SectorKind::symmetric);
    for (const auto& sec : sectors) {
      const Cplx want = scalar_eigenvalue_periodic(r0, ch.D, sec.representative);
      for (std::size_t idx : sec.basis_indices) {
        const Cplx got = t0.entries()(static_cast<Eigen::Index>(idx),
                                      static_cast<Eigen::Index>(idx));
        EXPECT_LT(std::abs(got - want) / std::abs(want), 1e-10);
      }
      // off-diagonal action on the sector column must vanish
      for (std::size_t idx : sec.basis_indices) {
        for (Eigen::Index row = 0; row < t0.entries().rows(); ++row) {
          if (static_cast<std::size_t>(row) == idx) continue;
          EXPECT_LT(std::abs(t0.entries()(row, static_cast<Eigen::Index>(idx))),
                    1e-10 * std::abs(want));
        }
      }
    }
  }
}

TEST(ScalarEigenvalue, BoundaryMatchesMatrixAtZero) {
  for (int n : {2, 3}) {
    for (int N = 1; N <= 3; ++N) {
      const SpinChain ch = chain_for(n, N);
      const KMatrixDatum kp = make_K_plus(ch.R, generic_plus(n));
      const KMatrixDatum km = make_K_minus(ch.R, generic_minus(n));
      const TensorOperator t0 =
          transfer_boundary_modified(ch, *kp.Kprime, km.K, Cplx(0.0));
      const TensorOperator r0 = ch.R.R(Cplx(0.0));
      const TensorOperator k0 = km.K(Cplx(0.0));
      const TensorOperator l0 = (*kp.Kprime)(Cplx(0.0));
      const auto sectors = enumerate_sectors(n, N, SectorKind::hyperoctahedral);
      for (const auto& sec : sectors) {
        const Cplx want =
            scalar_eigenvalue_boundary(r0, k0, l0, sec.representative);
        for (std::size_t idx : sec.basis_indices) {
          const Cplx got = t0.entries()(static_cast<Eigen::Index>(idx),
                                        static_cast<Eigen::Index>(idx));
          EXPECT_LT(std::abs(got - want) / std::abs(want), 1e-10)
              << "n=" << n << " N=" << N;
        }
      }
    }
  }
}

TEST(ScalarEigenvalue, BoundaryFlipInvarianceAndZIndependence) {
  const SpinChain ch1 = chain_for(3, 2, 42);
  const SpinChain ch2 = chain_for(3, 2, 99);
  const KMatrixDatum kp = make_K_plus(ch1.R, generic_plus(3));
  const KMatrixDatum km = make_K_minus(ch1.R, generic_minus(3));
  const TensorOperator r0 = ch1.R.R(Cplx(0.0));
  const TensorOperator k0 = km.K(Cplx(0.0));
  const TensorOperator l0 = (*kp.Kprime)(Cplx(0.0));
  // invariant under the entrywise flip beta_i -> n+1-beta_i
  const Cplx a = scalar_eigenvalue_boundary(r0, k0, l0, {1, 2});
  const Cplx b = scalar_eigenvalue_boundary(r0, k0, l0, {3, 2});
  EXPECT_NEAR(std::abs(a - b), 0.0, 1e-13 * std::abs(a));
  // the closed form contains no inhomogeneities: matrices at 0 for two
  // different tuples act with the same eigenvalue
  ASSERT_NE(ch1.cfg.z, ch2.cfg.z);
  const TensorOperator t1 = transfer_boundary_modified(ch1, *kp.Kprime, km.K, Cplx(0.0));
  const TensorOperator t2 = transfer_boundary_modified(ch2, *kp.Kprime, km.K, Cplx(0.0));
  EXPECT_LT(equation_residual(t1, t2).relative, 1e-10);
}
