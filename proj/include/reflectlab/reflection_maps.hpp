#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reflectlab/matrix_function.hpp"
#include "reflectlab/r_matrix.hpp"

namespace reflectlab {

/// chi_J(Y)(x) = J^-1 Y(x) J. Inverted by chi with J^-1.
inline MatrixFunction chi_J(const MatrixFunction& K, const TensorOperator& J) {
  Eigen::FullPivLU<Matrix> lu(J.entries());
  if (!lu.isInvertible())
    throw std::invalid_argument("chi_J: singular conjugating operator");
  const TensorOperator jinv(J.space(), lu.inverse());
  MatrixFunction out(K.local_dim(), K.arity(),
                     [K, J, jinv](Cplx x) { return jinv * K(x) * J; });
  out.eval_poles = K.eval_poles;
  out.inversion_poles = K.inversion_poles;
  out.singular = K.singular;
  out.degree_hint = K.degree_hint;
  return out;
}

/// psi_{M,r}(Y)(x) = Y(rx)^-1 M.
inline MatrixFunction psi_Mr(const MatrixFunction& K, const TensorOperator& M,
                             Cplx r) {
  MatrixFunction out(K.local_dim(), K.arity(),
                     [K, M, r](Cplx x) { return K(r * x).inverse() * M; });
  for (const Cplx& p : K.eval_poles) out.eval_poles.push_back(p / r);
  for (const Cplx& p : K.inversion_poles) out.eval_poles.push_back(p / r);
  if (K.singular) {
    auto inner = K.singular;
    out.singular = [inner, r](Cplx x) { return inner(r * x); };
  }
  return out;
}

/// psi_{M,r}^-1(Y)(x) = M Y(x/r)^-1.
inline MatrixFunction psi_Mr_inverse(const MatrixFunction& K,
                                     const TensorOperator& M, Cplx r) {
  MatrixFunction out(K.local_dim(), K.arity(),
                     [K, M, r](Cplx x) { return M * K(x / r).inverse(); });
  for (const Cplx& p : K.eval_poles) out.eval_poles.push_back(p * r);
  for (const Cplx& p : K.inversion_poles) out.eval_poles.push_back(p * r);
  if (K.singular) {
    auto inner = K.singular;
    out.singular = [inner, r](Cplx x) { return inner(x / r); };
  }
  return out;
}

/// phi_R(Y)_1(x) = Tr_0 Y_0(x) P_01 R_01(x^2); with use_rtilde the R factor is
/// replaced by Rtilde. phi_R and phi_Rtilde invert each other.
inline MatrixFunction phi_R(const MatrixFunction& K, const RMatrixDatum& datum,
                            bool use_rtilde = false) {
  if (K.arity() != 1)
    throw std::invalid_argument("phi_R: expects a one-leg function");
  const MatrixFunction& Rsel = use_rtilde ? datum.Rtilde : datum.R;
  const int n = datum.n;
  // workspace legs {0 (traced), 1}; P relabelled onto them
  const LegSpace work(n, {0, 1});
  const TensorOperator P01 = embed(datum.P, {0, 1}, work);

  MatrixFunction out(n, 1, [K, Rsel, work, P01](Cplx x) {
    const TensorOperator y0 = embed(K(x), {0}, work);
    const TensorOperator r01 = embed(Rsel(x * x), {0, 1}, work);
    return partial_trace(y0 * P01 * r01, 0);
  });
  out.eval_poles = K.eval_poles;
  for (const Cplx& s : Rsel.eval_poles) {
    const Cplx root = std::sqrt(s);
    out.eval_poles.push_back(root);
    out.eval_poles.push_back(-root);
  }
  if (K.singular || Rsel.singular) {
    auto ks = K.singular;
    auto rs = Rsel.singular;
    out.singular = [ks, rs](Cplx x) {
      if (ks && ks(x)) return true;
      return rs && rs(x * x);
    };
  }
  if (K.degree_hint && !use_rtilde) out.degree_hint = *K.degree_hint + 2;
  return out;
}

/// Boundary crossing symmetry: phi_R after psi_{M,r} after chi_J. Maps
/// solutions of the left reflection equation to new ones,
///   K^[1]_1(x) = Tr_0 J_0^-1 K^[0]_0(rx)^-1 J_0 M_0 P_01 R_01(x^2).
inline MatrixFunction boundary_crossing(const MatrixFunction& K0,
                                        const RMatrixDatum& datum) {
  return phi_R(psi_Mr(chi_J(K0, datum.J), datum.M, datum.r), datum, false);
}

}  // namespace reflectlab
