#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reflectlab/matrix_function.hpp"
#include "reflectlab/r_matrix.hpp"
#include "reflectlab/reflection_maps.hpp"
#include "reflectlab/residual.hpp"

namespace reflectlab {

/// Parameters of the degree-2 boundary family K_{theta,kappa,xi}.
struct KFamilyParams {
  Cplx theta{1.0, 0.0};
  Cplx kappa{0.0, 0.0};
  std::vector<Cplx> xi;  // floor(n/2) nonzero entries
};

namespace detail {

inline Matrix k_family_entries(int n, const KFamilyParams& p, Cplx x) {
  Matrix m = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    const int abar = n - 1 - a;
    m(a, a) += p.theta * x;
    if (2 * a < n - 1) {
      m(a, a) += 1.0 - p.kappa;
      m(abar, a) += (p.kappa / p.xi[static_cast<std::size_t>(a)]) * (1.0 - x * x);
    } else if (2 * a == n - 1) {
      m(a, a) += 1.0 - p.kappa * x * x;
    } else {
      m(abar, a) += p.xi[static_cast<std::size_t>(abar)] * (1.0 - x * x);
      m(a, a) += (1.0 - p.kappa) * x * x;
    }
  }
  return m;
}

}  // namespace detail

/// K_{theta,kappa,xi}: a polynomial of degree 2 on C^n solving the left
/// reflection equation, regular at x = +-1 with K(+-1) = (theta +- (1-kappa)) Id
/// ... up to the sign convention K(1) = (theta + 1 - kappa) Id,
/// K(-1) = (1 - kappa - theta) Id.
inline MatrixFunction make_K_family(int n, const KFamilyParams& p) {
  if (p.xi.size() != static_cast<std::size_t>(n / 2))
    throw std::invalid_argument("make_K_family: xi must have floor(n/2) entries");
  for (const Cplx& v : p.xi)
    if (std::abs(v) < kEpsFloor)
      throw std::invalid_argument("make_K_family: zero xi entry");
  const LegSpace one(n, {1});
  MatrixFunction f(n, 1, [n, p, one](Cplx x) {
    return TensorOperator(one, detail::k_family_entries(n, p, x));
  });
  f.degree_hint = 2;
  f.inversion_poles = detect_inversion_poles(f, 2 * n);
  return f;
}

/// One side of the boundary datum: the raw family, the derived K (K+ or K-),
/// and for the plus side the dual-boundary K' both as phi_Rtilde(K+) (the
/// route used everywhere downstream) and in closed form (cross-check).
struct KMatrixDatum {
  enum class Side { plus, minus };
  Side side;
  KFamilyParams params;
  MatrixFunction family;
  MatrixFunction K;
  std::optional<MatrixFunction> Kprime;         // phi_Rtilde(K+), canonical
  std::optional<MatrixFunction> Kprime_closed;  // explicit polynomial form
};

/// K'(x) in closed form: q^-1 K_{theta,kappa,Delta_q xi}(q^n x) M for n even,
/// K_{theta/q,kappa/q^2,Delta_q xi}(q^n x) M for n odd, with
/// Delta_q = diag(q^(2 floor(n/2)-1), ..., q).
inline MatrixFunction kprime_closed_form(const RMatrixDatum& d,
                                         const KFamilyParams& p) {
  const int n = d.n;
  const Cplx q = d.q;
  KFamilyParams cp = p;
  const int half = n / 2;
  for (int a = 0; a < half; ++a)
    cp.xi[static_cast<std::size_t>(a)] *=
        std::pow(q, static_cast<double>(2 * half - 1 - 2 * a));
  Cplx prefactor = 1.0;
  if (n % 2 == 0) {
    prefactor = 1.0 / q;
  } else {
    cp.theta /= q;
    cp.kappa /= q * q;
  }
  const LegSpace one(n, {1});
  const TensorOperator M = d.M;
  const Cplx qn = std::pow(q, static_cast<double>(n));
  MatrixFunction f(n, 1, [n, cp, prefactor, qn, M, one](Cplx x) {
    return prefactor *
           (TensorOperator(one, detail::k_family_entries(n, cp, qn * x)) * M);
  });
  f.degree_hint = 2;
  return f;
}

/// K+(x) = (1 - q^(2n) x^2) K_{theta,kappa,xi}(x), plus both K' routes.
inline KMatrixDatum make_K_plus(const RMatrixDatum& d, const KFamilyParams& p) {
  MatrixFunction family = make_K_family(d.n, p);
  const Cplx q2n = std::pow(d.q, static_cast<double>(2 * d.n));
  MatrixFunction K(d.n, 1, [family, q2n](Cplx x) {
    return (1.0 - q2n * x * x) * family.eval_direct(x);
  });
  K.degree_hint = 4;
  K.inversion_poles = family.inversion_poles;
  const Cplx qmn = 1.0 / std::sqrt(q2n);
  K.inversion_poles.push_back(qmn);
  K.inversion_poles.push_back(-qmn);

  MatrixFunction kprime = phi_R(K, d, /*use_rtilde=*/true);
  kprime.degree_hint = 2;  // polynomial despite the Rtilde factors

  return KMatrixDatum{KMatrixDatum::Side::plus, p,       std::move(family),
                      std::move(K),             kprime,  kprime_closed_form(d, p)};
}

/// K- = chi_J(K_{theta,kappa,xi}).
inline KMatrixDatum make_K_minus(const RMatrixDatum& d, const KFamilyParams& p) {
  MatrixFunction family = make_K_family(d.n, p);
  MatrixFunction K = chi_J(family, d.J);
  return KMatrixDatum{KMatrixDatum::Side::minus, p, std::move(family),
                      std::move(K), std::nullopt, std::nullopt};
}

enum class ReflectionKind { LRE, RRE, DRE };

inline const char* reflection_name(ReflectionKind k) {
  switch (k) {
    case ReflectionKind::LRE: return "LRE";
    case ReflectionKind::RRE: return "RRE";
    default: return "DRE";
  }
}

/// Residual of the requested reflection equation for a one-leg K against the
/// datum's R:
///   LRE: R12(x/y) K1(x) R21(xy) K2(y) = K2(y) R12(xy) K1(x) R21(x/y)
///   RRE: R21(x/y) K1(x) R12(xy) K2(y) = K2(y) R21(xy) K1(x) R12(x/y)
///   DRE: R12(x/y)^-1 K1(x) Rt21(xy) K2(y) = K2(y) Rt12(xy) K1(x) R21(x/y)^-1
inline Residual check_reflection(const RMatrixDatum& d, const MatrixFunction& K,
                                 ReflectionKind kind, Cplx x, Cplx y) {
  const LegSpace two(d.n, {1, 2});
  const TensorOperator k1x = embed(K(x), {1}, two);
  const TensorOperator k2y = embed(K(y), {2}, two);
  switch (kind) {
    case ReflectionKind::LRE: {
      const TensorOperator lhs = d.R(x / y) * k1x * d.R21(x * y) * k2y;
      const TensorOperator rhs = k2y * d.R(x * y) * k1x * d.R21(x / y);
      return equation_residual(lhs, rhs);
    }
    case ReflectionKind::RRE: {
      const TensorOperator lhs = d.R21(x / y) * k1x * d.R(x * y) * k2y;
      const TensorOperator rhs = k2y * d.R21(x * y) * k1x * d.R(x / y);
      return equation_residual(lhs, rhs);
    }
    default: {
      const TensorOperator rinv = d.R(x / y).inverse();
      const TensorOperator r21inv = d.R21(x / y).inverse();
      const TensorOperator t12 = d.Rtilde(x * y);
      const TensorOperator t21 = d.P * t12 * d.P;
      const TensorOperator lhs = rinv * k1x * t21 * k2y;
      const TensorOperator rhs = k2y * t12 * k1x * r21inv;
      return equation_residual(lhs, rhs);
    }
  }
}

/// K(sigma) against the identity at sigma = +-1. The forced multiple can
/// vanish for special parameters; that case is flagged degenerate instead of
/// pass/fail.
struct RegularityResult {
  Residual residual;
  bool degenerate = false;
};

inline RegularityResult check_boundary_regularity(const MatrixFunction& K,
                                                  double sigma,
                                                  double scale_probe = 1.7) {
  RegularityResult out;
  const TensorOperator at = K(Cplx(sigma));
  const double scale = K(Cplx(scale_probe)).norm();
  if (at.norm() <= 1e-12 * std::max(scale, 1.0)) {
    out.degenerate = true;
    out.residual.scalar = 0.0;
    return out;
  }
  out.residual = proportionality(at, TensorOperator::identity(at.space()));
  return out;
}

/// Largest |entry| of K-(0) outside K-(0) v_a in span{ v_gbar : g <= a }.
inline double structure_defect_K_minus_at_zero(const MatrixFunction& Kminus, int n) {
  const Matrix m = Kminus(Cplx(0.0)).entries();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < n; ++g)
      if (!(g <= a)) worst = std::max(worst, std::abs(m(n - 1 - g, a)));
  return worst;
}

/// Largest |entry| of K'(0) outside K'(0) v_abar in span{ v_g : g <= a }.
inline double structure_defect_K_prime_at_zero(const MatrixFunction& Kprime, int n) {
  const Matrix m = Kprime(Cplx(0.0)).entries();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < n; ++g)
      if (!(g <= a)) worst = std::max(worst, std::abs(m(g, n - 1 - a)));
  return worst;
}

/// Largest |entry| of K(x) outside K(x) v_a in C v_a + C v_abar.
inline double image_defect_K(const MatrixFunction& K, int n, Cplx x) {
  const Matrix m = K(x).entries();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < n; ++g)
      if (g != a && g != n - 1 - a) worst = std::max(worst, std::abs(m(g, a)));
  return worst;
}

}  // namespace reflectlab
