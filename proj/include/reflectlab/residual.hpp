#pragma once

#include <stdexcept>

#include "reflectlab/tensor.hpp"

namespace reflectlab {

/// Frobenius-norm defect of an identity. For proportionality claims the
/// scalar field carries the least-squares fitted constant.
struct Residual {
  double absolute = 0.0;
  double relative = 0.0;
  Cplx scalar{0.0, 0.0};
};

namespace detail {
inline void require_same_space(const TensorOperator& a, const TensorOperator& b,
                               const char* what) {
  if (!(a.space() == b.space()))
    throw std::invalid_argument(std::string(what) +
                                ": operands live on different leg spaces");
}
}  // namespace detail

inline Cplx frobenius_inner(const TensorOperator& y, const TensorOperator& x) {
  // conjugate-linear in the first slot
  return (y.entries().conjugate().cwiseProduct(x.entries())).sum();
}

/// Least-squares fit X ~ lambda Y: lambda = <Y,X>_F / <Y,Y>_F,
/// absolute = |X - lambda Y|_F, relative normalized by |X|_F.
inline Residual proportionality(const TensorOperator& x, const TensorOperator& y) {
  detail::require_same_space(x, y, "proportionality");
  const double ynorm = y.norm();
  if (ynorm < kEpsFloor)
    throw std::invalid_argument("proportionality: reference operator is numerically zero");
  const Cplx lambda = frobenius_inner(y, x) / frobenius_inner(y, y);
  const double abs = (x.entries() - lambda * y.entries()).norm();
  Residual r;
  r.absolute = abs;
  r.relative = abs / std::max(x.norm(), kEpsFloor);
  r.scalar = lambda;
  return r;
}

/// |XY - YX|_F, relative normalized by |X|_F |Y|_F.
inline Residual commutator_residual(const TensorOperator& x, const TensorOperator& y) {
  detail::require_same_space(x, y, "commutator_residual");
  const double abs = (x.entries() * y.entries() - y.entries() * x.entries()).norm();
  Residual r;
  r.absolute = abs;
  r.relative = abs / std::max(x.norm() * y.norm(), kEpsFloor);
  return r;
}

/// |L - R|_F, relative normalized by max(|L|_F, |R|_F).
inline Residual equation_residual(const TensorOperator& lhs, const TensorOperator& rhs) {
  detail::require_same_space(lhs, rhs, "equation_residual");
  const double abs = (lhs.entries() - rhs.entries()).norm();
  Residual r;
  r.absolute = abs;
  r.relative = abs / std::max({lhs.norm(), rhs.norm(), kEpsFloor});
  return r;
}

}  // namespace reflectlab
