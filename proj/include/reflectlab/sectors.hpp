#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "reflectlab/tensor.hpp"

namespace reflectlab {

enum class SectorKind { symmetric, hyperoctahedral };

/// One orbit of basis tuples: under permutations of the entries (symmetric)
/// or permutations plus entrywise flips a -> n+1-a (hyperoctahedral). The
/// representative is the lexicographically smallest member.
struct Sector {
  std::vector<int> representative;         // 1-based entries
  std::vector<std::vector<int>> members;   // sorted lexicographically
  std::vector<std::size_t> basis_indices;  // flat big-endian indices, sorted
};

namespace detail {

inline std::size_t tuple_to_index(const std::vector<int>& t, int n) {
  std::size_t idx = 0;
  for (int v : t) idx = idx * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(v - 1);
  return idx;
}

inline std::vector<int> index_to_tuple(std::size_t idx, int n, int N) {
  std::vector<int> t(static_cast<std::size_t>(N));
  for (int i = N - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(n)) + 1;
    idx /= static_cast<std::size_t>(n);
  }
  return t;
}

}  // namespace detail

/// Breadth-first orbit closure under adjacent transpositions (and entry flips
/// for the hyperoctahedral action). Sectors are returned sorted by
/// representative; together they partition all n^N tuples.
inline std::vector<Sector> enumerate_sectors(int n, int N, SectorKind kind,
                                             std::size_t entry_cap = kDefaultEntryCap) {
  if (n < 2 || N < 1) throw std::invalid_argument("enumerate_sectors: bad shape");
  std::size_t total = 1;
  for (int i = 0; i < N; ++i) {
    total *= static_cast<std::size_t>(n);
    if (total * total > entry_cap)
      throw std::invalid_argument("enumerate_sectors: dimension cap exceeded");
  }

  std::vector<char> seen(total, 0);
  std::vector<Sector> sectors;
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> queue{start};
    seen[start] = 1;
    std::vector<std::size_t> orbit;
    while (!queue.empty()) {
      const std::size_t cur = queue.back();
      queue.pop_back();
      orbit.push_back(cur);
      const std::vector<int> t = detail::index_to_tuple(cur, n, N);
      std::vector<std::vector<int>> next;
      for (int i = 0; i + 1 < N; ++i) {
        std::vector<int> s = t;
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i) + 1]);
        next.push_back(std::move(s));
      }
      if (kind == SectorKind::hyperoctahedral) {
        for (int i = 0; i < N; ++i) {
          std::vector<int> s = t;
          s[static_cast<std::size_t>(i)] = n + 1 - s[static_cast<std::size_t>(i)];
          next.push_back(std::move(s));
        }
      }
      for (const auto& s : next) {
        const std::size_t idx = detail::tuple_to_index(s, n);
        if (!seen[idx]) {
          seen[idx] = 1;
          queue.push_back(idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    Sector sec;
    sec.basis_indices = orbit;
    for (std::size_t idx : orbit) sec.members.push_back(detail::index_to_tuple(idx, n, N));
    sec.representative = sec.members.front();
    sectors.push_back(std::move(sec));
  }
  std::sort(sectors.begin(), sectors.end(), [](const Sector& a, const Sector& b) {
    return a.representative < b.representative;
  });
  return sectors;
}

/// Largest |entry| of op outside the sector block pattern.
inline double block_invariance_defect(const TensorOperator& op,
                                      const std::vector<Sector>& sectors) {
  const std::size_t dim = op.dim();
  std::vector<int> sector_of(dim, -1);
  for (std::size_t s = 0; s < sectors.size(); ++s)
    for (std::size_t idx : sectors[s].basis_indices)
      sector_of[idx] = static_cast<int>(s);
  double worst = 0.0;
  const Matrix& m = op.entries();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (sector_of[i] != sector_of[j])
        worst = std::max(worst, std::abs(m(static_cast<Eigen::Index>(i),
                                           static_cast<Eigen::Index>(j))));
  return worst;
}

/// Eigenvalue of the periodic transfer matrix at spectral parameter 0 on the
/// basis vector v_beta, read off the evaluated matrices:
///   sum_a d_a^a prod_i r_{a beta_i}^{a beta_i}.
/// Invariant under permutations of beta.
inline Cplx scalar_eigenvalue_periodic(const TensorOperator& r_zero,
                                       const TensorOperator& twist,
                                       const std::vector<int>& beta) {
  const int n = r_zero.space().local_dim;
  const Matrix& r = r_zero.entries();
  const Matrix& d = twist.entries();
  Cplx total = 0.0;
  for (int a = 0; a < n; ++a) {
    Cplx prod = d(a, a);
    for (int b1 : beta) {
      const int bi = b1 - 1;
      prod *= r(a * n + bi, a * n + bi);
    }
    total += prod;
  }
  return total;
}

/// Eigenvalue of the modified boundary transfer matrix at 0 on v_beta:
///   sum_a k_a^{abar} l_{abar}^a prod_i r_{a beta_i}^{a beta_i}
///                                      r_{a betabar_i}^{a betabar_i},
/// with k from K-(0) and l from K'(0). Invariant under the hyperoctahedral
/// action on beta; contains no inhomogeneity dependence.
inline Cplx scalar_eigenvalue_boundary(const TensorOperator& r_zero,
                                       const TensorOperator& k_minus_zero,
                                       const TensorOperator& k_prime_zero,
                                       const std::vector<int>& beta) {
  const int n = r_zero.space().local_dim;
  const Matrix& r = r_zero.entries();
  const Matrix& k = k_minus_zero.entries();
  const Matrix& l = k_prime_zero.entries();
  Cplx total = 0.0;
  for (int a = 0; a < n; ++a) {
    const int abar = n - 1 - a;
    Cplx prod = k(abar, a) * l(a, abar);
    for (int b1 : beta) {
      const int bi = b1 - 1;
      const int bibar = n - 1 - bi;
      prod *= r(a * n + bi, a * n + bi) * r(a * n + bibar, a * n + bibar);
    }
    total += prod;
  }
  return total;
}

}  // namespace reflectlab
