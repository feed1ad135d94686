#pragma once

#include <stdexcept>
#include <vector>

#include "reflectlab/chain.hpp"
#include "reflectlab/matrix_function.hpp"
#include "reflectlab/residual.hpp"
#include "reflectlab/transfer.hpp"

namespace reflectlab {

/// Transport matrix of the p-difference system for periodic twisted chains,
///   A_i(z;p) = R_{i,i-1}(p z_i/z_{i-1}) ... R_{i1}(p z_i/z_1) D_i
///              R_{Ni}(z_N/z_i)^-1 ... R_{i+1,i}(z_{i+1}/z_i)^-1,
/// acting on legs [1..N]. At p = 1 these are the scattering matrices.
inline TensorOperator transport_periodic(const SpinChain& ch, int i, Cplx p) {
  if (i < 1 || i > ch.N())
    throw std::invalid_argument("transport_periodic: site index out of range");
  const LegSpace sp = ch.state_space();
  TensorOperator acc = TensorOperator::identity(sp);
  for (int l = i - 1; l >= 1; --l)
    acc = acc * embed(ch.R.R(p * ch.z(i) / ch.z(l)), {i, l}, sp);
  acc = acc * embed(ch.D, {i}, sp);
  for (int l = ch.N(); l >= i + 1; --l)
    acc = acc * embed(ch.R.R(ch.z(l) / ch.z(i)).inverse(), {l, i}, sp);
  return acc;
}

/// Transport matrix for reflecting chains,
///   cA_i(z;p) = R_{i,i-1}(p z_i/z_{i-1}) ... R_{i1}(p z_i/z_1)
///               K+_i(p^(1/2) z_i) R_{1i}(z_1 z_i) ... R_{i-1,i}(z_{i-1} z_i)
///               R_{i+1,i}(z_{i+1} z_i) ... R_{Ni}(z_N z_i) K-_i(z_i)
///               R_{Ni}(z_N/z_i)^-1 ... R_{i+1,i}(z_{i+1}/z_i)^-1.
/// The square-root branch of the shift parameter is the supplied sqrt_p.
inline TensorOperator transport_boundary(const SpinChain& ch,
                                         const MatrixFunction& Kplus,
                                         const MatrixFunction& Kminus, int i,
                                         Cplx sqrt_p) {
  if (i < 1 || i > ch.N())
    throw std::invalid_argument("transport_boundary: site index out of range");
  const Cplx p = sqrt_p * sqrt_p;
  const LegSpace sp = ch.state_space();
  TensorOperator acc = TensorOperator::identity(sp);
  for (int l = i - 1; l >= 1; --l)
    acc = acc * embed(ch.R.R(p * ch.z(i) / ch.z(l)), {i, l}, sp);
  acc = acc * embed(Kplus(sqrt_p * ch.z(i)), {i}, sp);
  for (int l = 1; l <= i - 1; ++l)
    acc = acc * embed(ch.R.R(ch.z(l) * ch.z(i)), {l, i}, sp);
  for (int l = i + 1; l <= ch.N(); ++l)
    acc = acc * embed(ch.R.R(ch.z(l) * ch.z(i)), {l, i}, sp);
  acc = acc * embed(Kminus(ch.z(i)), {i}, sp);
  for (int l = ch.N(); l >= i + 1; --l)
    acc = acc * embed(ch.R.R(ch.z(l) / ch.z(i)).inverse(), {l, i}, sp);
  return acc;
}

/// Flatness defect of the difference system in the (i, j) direction:
/// A_i(p^{e_j} z; p) A_j(z; p) - A_j(p^{e_i} z; p) A_i(z; p).
inline Residual transport_consistency_periodic(const SpinChain& ch, int i, int j,
                                               Cplx p) {
  const SpinChain shifted_j = ch.shifted(j, p);
  const SpinChain shifted_i = ch.shifted(i, p);
  const TensorOperator lhs =
      transport_periodic(shifted_j, i, p) * transport_periodic(ch, j, p);
  const TensorOperator rhs =
      transport_periodic(shifted_i, j, p) * transport_periodic(ch, i, p);
  return equation_residual(lhs, rhs);
}

inline Residual transport_consistency_boundary(const SpinChain& ch,
                                               const MatrixFunction& Kplus,
                                               const MatrixFunction& Kminus,
                                               int i, int j, Cplx sqrt_p) {
  const Cplx p = sqrt_p * sqrt_p;
  const SpinChain shifted_j = ch.shifted(j, p);
  const SpinChain shifted_i = ch.shifted(i, p);
  const TensorOperator lhs = transport_boundary(shifted_j, Kplus, Kminus, i, sqrt_p) *
                             transport_boundary(ch, Kplus, Kminus, j, sqrt_p);
  const TensorOperator rhs = transport_boundary(shifted_i, Kplus, Kminus, j, sqrt_p) *
                             transport_boundary(ch, Kplus, Kminus, i, sqrt_p);
  return equation_residual(lhs, rhs);
}

/// The three interpolation identities tying transfer matrices at the
/// inhomogeneities to p = 1 transport matrices:
///   T(z_i;z)      ~ A_i(z;1)
///   cT(z_i;z)     ~ cA_i(z;1)
///   cT(z_i^-1;z)  ~ cA_i(z;1)^-1.
struct InterpolationReport {
  std::vector<Residual> periodic;
  std::vector<Residual> boundary;
  std::vector<Residual> boundary_inverse;
};

inline InterpolationReport interpolation_identities(const SpinChain& ch,
                                                    const MatrixFunction& Kprime,
                                                    const MatrixFunction& Kplus,
                                                    const MatrixFunction& Kminus) {
  InterpolationReport rep;
  for (int i = 1; i <= ch.N(); ++i) {
    rep.periodic.push_back(proportionality(transfer_periodic(ch, ch.z(i)),
                                           transport_periodic(ch, i, Cplx(1.0))));
    const TensorOperator ai =
        transport_boundary(ch, Kplus, Kminus, i, Cplx(1.0));
    rep.boundary.push_back(
        proportionality(transfer_boundary(ch, Kprime, Kminus, ch.z(i)), ai));
    rep.boundary_inverse.push_back(proportionality(
        transfer_boundary(ch, Kprime, Kminus, 1.0 / ch.z(i)), ai.inverse()));
  }
  return rep;
}

}  // namespace reflectlab
