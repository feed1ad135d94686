#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <stdexcept>
#include <vector>

#include "reflectlab/tensor.hpp"

namespace reflectlab {

/// Coefficients c_0..c_d of the degree-(nodes-1) interpolant through
/// (nodes[k], values[k]), solved from the Vandermonde system.
inline std::vector<Cplx> polynomial_fit(const std::vector<Cplx>& nodes,
                                        const std::vector<Cplx>& values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw std::invalid_argument("polynomial_fit: node/value size mismatch");
  const auto m = static_cast<Eigen::Index>(nodes.size());
  Matrix V(m, m);
  Eigen::VectorXcd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    Cplx p = 1.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      V(i, j) = p;
      p *= nodes[static_cast<std::size_t>(i)];
    }
    b(i) = values[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXcd c = V.colPivHouseholderQr().solve(b);
  return {c.data(), c.data() + m};
}

inline Cplx polynomial_eval(const std::vector<Cplx>& coeffs, Cplx x) {
  Cplx acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

/// Roots via the companion matrix, after trimming leading coefficients that
/// are tiny relative to the largest one.
inline std::vector<Cplx> polynomial_roots(std::vector<Cplx> coeffs,
                                          double trim_rel = 1e-12) {
  double scale = 0.0;
  for (const Cplx& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return {};
  while (coeffs.size() > 1 && std::abs(coeffs.back()) < trim_rel * scale)
    coeffs.pop_back();
  const std::size_t d = coeffs.size() - 1;
  if (d == 0) return {};
  Matrix C = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i)
    C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) =
        -coeffs[i] / coeffs[d];
  Eigen::ComplexEigenSolver<Matrix> es(C, /*computeEigenvectors=*/false);
  const auto& ev = es.eigenvalues();
  std::vector<Cplx> roots(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) roots[static_cast<std::size_t>(i)] = ev(i);
  return roots;
}

/// Merge points lying within `radius` of each other into centroids. Used to
/// recover multiple roots from their numerically scattered clusters.
inline std::vector<Cplx> cluster_points(const std::vector<Cplx>& pts, double radius) {
  std::vector<Cplx> centers;
  std::vector<int> counts;
  for (const Cplx& p : pts) {
    bool merged = false;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      if (std::abs(p - centers[i]) <= radius) {
        centers[i] = (centers[i] * static_cast<double>(counts[i]) + p) /
                     static_cast<double>(counts[i] + 1);
        ++counts[i];
        merged = true;
        break;
      }
    }
    if (!merged) {
      centers.push_back(p);
      counts.push_back(1);
    }
  }
  return centers;
}

/// Matrix-valued Lagrange interpolation through (nodes[k], values[k]).
inline Matrix lagrange_eval(const std::vector<Cplx>& nodes,
                            const std::vector<Matrix>& values, Cplx x) {
  if (nodes.size() != values.size() || nodes.empty())
    throw std::invalid_argument("lagrange_eval: node/value size mismatch");
  Matrix acc = Matrix::Zero(values[0].rows(), values[0].cols());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Cplx w = 1.0;
    for (std::size_t l = 0; l < nodes.size(); ++l)
      if (l != k) w *= (x - nodes[l]) / (nodes[k] - nodes[l]);
    acc += w * values[k];
  }
  return acc;
}

}  // namespace reflectlab
