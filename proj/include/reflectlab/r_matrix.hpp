#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reflectlab/matrix_function.hpp"
#include "reflectlab/residual.hpp"
#include "reflectlab/tensor.hpp"

namespace reflectlab {

/// The Uq(sl_n)-type trigonometric R-matrix on C^n (x) C^n,
///   R(x)(v_a (x) v_b) = q(1-x) v_a v_b + (1-q^2)x v_b v_a        (a < b)
///                       (1-q^2 x) v_a v_a                        (a = b)
///                       (1-q^2) v_b v_a + q(1-x) v_a v_b         (a > b),
/// together with its derived objects: R21 = P R P, the dual
/// Rtilde = ((R^t1)^-1)^t1, the flip P, the antidiagonal J, the diagonal
/// M v_a = q^(abar-a) v_a, and r = q^n.
struct RMatrixDatum {
  int n;
  Cplx q;
  Cplx r;
  MatrixFunction R;
  MatrixFunction R21;
  MatrixFunction Rtilde;
  TensorOperator P;
  TensorOperator J;
  TensorOperator M;
};

namespace detail {

inline Matrix r_entries(int n, Cplx q, Cplx x) {
  Matrix m = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int col = a * n + b;
      if (a == b) {
        m(col, col) = 1.0 - q * q * x;
      } else if (a < b) {
        m(a * n + b, col) += q * (1.0 - x);
        m(b * n + a, col) += (1.0 - q * q) * x;
      } else {
        m(b * n + a, col) += 1.0 - q * q;
        m(a * n + b, col) += q * (1.0 - x);
      }
    }
  return m;
}

inline bool t1_ill_conditioned(const Matrix& rt1) {
  Eigen::JacobiSVD<Matrix> svd(rt1);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) * 1e12 < sv(0);
}

}  // namespace detail

/// Rejects q = 0 and q^(2k) = 1 for k = 1..2n (root-of-unity degenerations).
inline void require_generic_q(int n, Cplx q, double eps = 1e-6) {
  if (std::abs(q) < eps)
    throw std::invalid_argument("make_R: q must be nonzero");
  Cplx p = 1.0;
  for (int k = 1; k <= 2 * n; ++k) {
    p *= q * q;
    if (std::abs(p - 1.0) < eps)
      throw std::invalid_argument("make_R: q^" + std::to_string(2 * k) +
                                  " is too close to 1 (generic-q guard)");
  }
}

inline RMatrixDatum make_R(int n, Cplx q) {
  require_generic_q(n, q);
  const LegSpace two(n, {1, 2});
  const LegSpace one(n, {1});

  MatrixFunction R(n, 2, [n, q, two](Cplx x) {
    return TensorOperator(two, detail::r_entries(n, q, x));
  });
  R.degree_hint = 1;
  R.inversion_poles = {q * q, 1.0 / (q * q)};

  TensorOperator P = flip(n);
  MatrixFunction R21(n, 2, [n, q, two, P](Cplx x) {
    return P * TensorOperator(two, detail::r_entries(n, q, x)) * P;
  });
  R21.degree_hint = 1;
  R21.inversion_poles = R.inversion_poles;

  // Singular set of R^t1: numeric detection (det fit + clustered roots),
  // backed by a condition-number predicate at evaluation time.
  MatrixFunction rt1(n, 2, [n, q, two](Cplx x) {
    return partial_transpose(TensorOperator(two, detail::r_entries(n, q, x)), 1);
  });
  const std::vector<Cplx> t1_singular = detect_inversion_poles(rt1, n * n);

  MatrixFunction Rtilde(n, 2, [n, q, two](Cplx x) {
    const TensorOperator rt = partial_transpose(
        TensorOperator(two, detail::r_entries(n, q, x)), 1);
    return partial_transpose(rt.inverse(), 1);
  });
  Rtilde.eval_poles = t1_singular;
  Rtilde.singular = [n, q, two](Cplx x) {
    const Matrix rt1m =
        partial_transpose(TensorOperator(two, detail::r_entries(n, q, x)), 1).entries();
    return detail::t1_ill_conditioned(rt1m);
  };

  Matrix jm = Matrix::Zero(n, n);
  Matrix mm = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    jm(n - 1 - a, a) = 1.0;
    mm(a, a) = std::pow(q, static_cast<double>(n - 1 - 2 * a));
  }

  return RMatrixDatum{n,
                      q,
                      std::pow(q, static_cast<double>(n)),
                      std::move(R),
                      std::move(R21),
                      std::move(Rtilde),
                      std::move(P),
                      TensorOperator(one, std::move(jm)),
                      TensorOperator(one, std::move(mm))};
}

/// R12(x/y) R13(x) R23(y) = R23(y) R13(x) R12(x/y) on three legs.
inline Residual check_YBE(const RMatrixDatum& d, Cplx x, Cplx y) {
  const LegSpace three(d.n, {1, 2, 3});
  const TensorOperator r12 = embed(d.R(x / y), {1, 2}, three);
  const TensorOperator r13 = embed(d.R(x), {1, 3}, three);
  const TensorOperator r23 = embed(d.R(y), {2, 3}, three);
  return equation_residual(r12 * r13 * r23, r23 * r13 * r12);
}

/// R(x) R21(1/x) proportional to the identity.
inline Residual check_unitarity(const RMatrixDatum& d, Cplx x) {
  const TensorOperator prod = d.R(x) * d.R21(1.0 / x);
  return proportionality(prod, TensorOperator::identity(prod.space()));
}

/// K(x) K(1/x) proportional to the identity (boundary unitarity).
inline Residual check_boundary_unitarity(const MatrixFunction& K, Cplx x) {
  const TensorOperator prod = K(x) * K(1.0 / x);
  return proportionality(prod, TensorOperator::identity(prod.space()));
}

/// M2^-1 R12(r^2 x)^-1 M2 proportional to Rtilde12(x).
inline Residual check_crossing(const RMatrixDatum& d, Cplx x) {
  const LegSpace two(d.n, {1, 2});
  const TensorOperator m2 = embed(d.M, {2}, two);
  const TensorOperator lhs = m2.inverse() * d.R(d.r * d.r * x).inverse() * m2;
  return proportionality(lhs, d.Rtilde(x));
}

/// [R(x), M (x) M] = 0.
inline Residual check_crossing_compatibility(const RMatrixDatum& d, Cplx x) {
  const LegSpace two(d.n, {1, 2});
  const TensorOperator mm = embed(d.M, {1}, two) * embed(d.M, {2}, two);
  return commutator_residual(d.R(x), mm);
}

/// R12(x) J1 J2 = J1 J2 R21(x).
inline Residual check_flip_conjugation(const RMatrixDatum& d, Cplx x) {
  const LegSpace two(d.n, {1, 2});
  const TensorOperator jj = embed(d.J, {1}, two) * embed(d.J, {2}, two);
  return equation_residual(d.R(x) * jj, jj * d.R21(x));
}

/// R12(x/y)^-1 Rt13(x) Rt23(y) = Rt23(y) Rt13(x) R12(x/y)^-1.
inline Residual check_twisted_YBE(const RMatrixDatum& d, Cplx x, Cplx y) {
  const LegSpace three(d.n, {1, 2, 3});
  const TensorOperator r12inv = embed(d.R(x / y).inverse(), {1, 2}, three);
  const TensorOperator t13 = embed(d.Rtilde(x), {1, 3}, three);
  const TensorOperator t23 = embed(d.Rtilde(y), {2, 3}, three);
  return equation_residual(r12inv * t13 * t23, t23 * t13 * r12inv);
}

/// Rtilde of Rtilde returns R.
inline Residual check_rtilde_involution(const RMatrixDatum& d, Cplx x) {
  const TensorOperator tt =
      partial_transpose(partial_transpose(d.Rtilde(x), 1).inverse(), 1);
  return equation_residual(tt, d.R(x));
}

/// Largest |entry| of R(0) outside the pattern
/// R(0)(v_a (x) v_b) in span{ v_g (x) v_d : g <= a, d >= b }.
inline double structure_defect_R_at_zero(const RMatrixDatum& d) {
  const Matrix m = d.R(Cplx(0.0)).entries();
  const int n = d.n;
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g = 0; g < n; ++g)
        for (int dd = 0; dd < n; ++dd)
          if (!(g <= a && dd >= b))
            worst = std::max(worst, std::abs(m(g * n + dd, a * n + b)));
  return worst;
}

/// Largest |entry| of R(x) outside the two-dimensional mixing pattern
/// R(x)(v_a (x) v_b) in C v_a v_b + C v_b v_a.
inline double image_defect_R(const RMatrixDatum& d, Cplx x) {
  const Matrix m = d.R(x).entries();
  const int n = d.n;
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g = 0; g < n; ++g)
        for (int dd = 0; dd < n; ++dd) {
          const bool allowed = (g == a && dd == b) || (g == b && dd == a);
          if (!allowed)
            worst = std::max(worst, std::abs(m(g * n + dd, a * n + b)));
        }
  return worst;
}

}  // namespace reflectlab
