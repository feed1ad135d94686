#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "reflectlab/chain.hpp"
#include "reflectlab/k_matrix.hpp"
#include "reflectlab/matrix_function.hpp"
#include "reflectlab/r_matrix.hpp"
#include "reflectlab/residual.hpp"

namespace reflectlab {

inline constexpr int kAuxLeg = 0;
inline constexpr int kAux2Leg = -1;  // the 0' leg of two-auxiliary relations

/// U_0(x;z) = R_0N(x/z_N) ... R_01(x/z_1) on legs [0, 1..N].
/// Products of degree-1 factors are accumulated strictly left to right.
inline TensorOperator monodromy_periodic(const SpinChain& ch, Cplx x) {
  const LegSpace sp = ch.aux_space();
  TensorOperator acc = TensorOperator::identity(sp);
  for (int i = ch.N(); i >= 1; --i)
    acc = acc * embed(ch.R.R(x / ch.z(i)), {kAuxLeg, i}, sp);
  return acc;
}

/// T(x;z) = Tr_0 D_0 U_0(x;z), a polynomial of degree N in x.
inline TensorOperator transfer_periodic(const SpinChain& ch, Cplx x) {
  const LegSpace sp = ch.aux_space();
  return partial_trace(embed(ch.D, {kAuxLeg}, sp) * monodromy_periodic(ch, x),
                       kAuxLeg);
}

/// cU_0(x;z) = R_01(1/(x z_1))^-1 ... R_0N(1/(x z_N))^-1 K-_0(x)
///             R_0N(x/z_N) ... R_01(x/z_1), factor-by-factor inverses.
inline TensorOperator boundary_monodromy(const SpinChain& ch,
                                         const MatrixFunction& Kminus, Cplx x) {
  const LegSpace sp = ch.aux_space();
  TensorOperator acc = TensorOperator::identity(sp);
  for (int i = 1; i <= ch.N(); ++i)
    acc = acc * embed(ch.R.R(1.0 / (x * ch.z(i))).inverse(), {kAuxLeg, i}, sp);
  acc = acc * embed(Kminus(x), {kAuxLeg}, sp);
  for (int i = ch.N(); i >= 1; --i)
    acc = acc * embed(ch.R.R(x / ch.z(i)), {kAuxLeg, i}, sp);
  return acc;
}

/// Same operator through the folded route U(x^-1)^-1 K-_0(x) U(x), inverting
/// the assembled monodromy in one step.
inline TensorOperator boundary_monodromy_folded(const SpinChain& ch,
                                                const MatrixFunction& Kminus,
                                                Cplx x) {
  const LegSpace sp = ch.aux_space();
  return monodromy_periodic(ch, 1.0 / x).inverse() *
         embed(Kminus(x), {kAuxLeg}, sp) * monodromy_periodic(ch, x);
}

/// cT(x;z) = Tr_0 K'_0(x) cU_0(x;z).
inline TensorOperator transfer_boundary(const SpinChain& ch,
                                        const MatrixFunction& Kprime,
                                        const MatrixFunction& Kminus, Cplx x) {
  const LegSpace sp = ch.aux_space();
  return partial_trace(
      embed(Kprime(x), {kAuxLeg}, sp) * boundary_monodromy(ch, Kminus, x),
      kAuxLeg);
}

/// Modified boundary transfer matrix,
///   cTmod(x;z) = Tr_0 K'_0(x) R_10(x z_1) ... R_N0(x z_N) K-_0(x)
///                R_0N(x/z_N) ... R_01(x/z_1),
/// polynomial in x of degree 2N+4 and proportional to cT(x;z).
inline TensorOperator transfer_boundary_modified(const SpinChain& ch,
                                                 const MatrixFunction& Kprime,
                                                 const MatrixFunction& Kminus,
                                                 Cplx x) {
  const LegSpace sp = ch.aux_space();
  TensorOperator acc = embed(Kprime(x), {kAuxLeg}, sp);
  for (int i = 1; i <= ch.N(); ++i)
    acc = acc * embed(ch.R.R(x * ch.z(i)), {i, kAuxLeg}, sp);
  acc = acc * embed(Kminus(x), {kAuxLeg}, sp);
  for (int i = ch.N(); i >= 1; --i)
    acc = acc * embed(ch.R.R(x / ch.z(i)), {kAuxLeg, i}, sp);
  return partial_trace(acc, kAuxLeg);
}

/// Monodromy over a contiguous slice lo..hi of the chain, on legs
/// [0, lo..hi]: R_0,hi(x/z_hi) ... R_0,lo(x/z_lo).
inline MatrixFunction partial_monodromy(const SpinChain& ch, int lo, int hi) {
  if (lo < 1 || hi > ch.N() || lo > hi)
    throw std::invalid_argument("partial_monodromy: bad slice");
  std::vector<int> legs{kAuxLeg};
  for (int i = lo; i <= hi; ++i) legs.push_back(i);
  const LegSpace sp(ch.n(), legs, ch.cfg.entry_cap);
  const RMatrixDatum R = ch.R;
  std::vector<Cplx> zs;
  for (int i = lo; i <= hi; ++i) zs.push_back(ch.z(i));
  MatrixFunction out(ch.n(), static_cast<int>(sp.rank()), [R, zs, sp, lo](Cplx x) {
    TensorOperator acc = TensorOperator::identity(sp);
    for (int k = static_cast<int>(zs.size()) - 1; k >= 0; --k)
      acc = acc * embed(R.R(x / zs[static_cast<std::size_t>(k)]),
                        {kAuxLeg, lo + k}, sp);
    return acc;
  });
  return out;
}

/// cU- = U(x^-1)^-1 K-_0(x) U(x) for a global YBE solution U on legs [0, W].
inline MatrixFunction fold_minus(const MatrixFunction& U,
                                 const MatrixFunction& Kminus) {
  return MatrixFunction(U.local_dim(), U.arity(), [U, Kminus](Cplx x) {
    const TensorOperator ux = U(x);
    const TensorOperator k0 = embed(Kminus(x), {kAuxLeg}, ux.space());
    return U(1.0 / x).inverse() * k0 * ux;
  });
}

/// cU+ = ((U(x^-1)^-1)^{t0} K'_0(x)^{t0} U(x)^{t0})^{t0}.
inline MatrixFunction fold_plus(const MatrixFunction& U,
                                const MatrixFunction& Kprime) {
  return MatrixFunction(U.local_dim(), U.arity(), [U, Kprime](Cplx x) {
    const TensorOperator ux = U(x);
    const TensorOperator k0t =
        partial_transpose(embed(Kprime(x), {kAuxLeg}, ux.space()), kAuxLeg);
    const TensorOperator a = partial_transpose(U(1.0 / x).inverse(), kAuxLeg);
    const TensorOperator b = partial_transpose(ux, kAuxLeg);
    return partial_transpose(a * k0t * b, kAuxLeg);
  });
}

namespace detail {

/// Embed two auxiliary-leg operators into the union space
/// [0, wplus..., wminus...] and return that space.
inline LegSpace union_space(const TensorOperator& up, const TensorOperator& um,
                            std::size_t entry_cap) {
  std::vector<int> legs{kAuxLeg};
  for (int l : up.space().legs)
    if (l != kAuxLeg) legs.push_back(l);
  for (int l : um.space().legs)
    if (l != kAuxLeg) legs.push_back(l);
  return LegSpace(up.space().local_dim, std::move(legs), entry_cap);
}

/// [0, 0', W] for relations where the same factor appears in two auxiliary
/// copies.
inline LegSpace two_aux_space(const TensorOperator& u, std::size_t entry_cap) {
  std::vector<int> legs{kAuxLeg, kAux2Leg};
  for (int l : u.space().legs)
    if (l != kAuxLeg) legs.push_back(l);
  return LegSpace(u.space().local_dim, std::move(legs), entry_cap);
}

}  // namespace detail

/// T_12(x) = Tr_0 U+_01(x) U-_02(x) for already-evaluated factors sharing the
/// auxiliary leg 0; W legs must be disjoint.
inline TensorOperator trace_general_transfer(const TensorOperator& up,
                                             const TensorOperator& um,
                                             std::size_t entry_cap = kDefaultEntryCap) {
  const LegSpace sp = detail::union_space(up, um, entry_cap);
  const TensorOperator a = embed(up, up.space().legs, sp);
  const TensorOperator b = embed(um, um.space().legs, sp);
  return partial_trace(a * b, kAuxLeg);
}

/// Global exchange relation for a monodromy U on legs [0, W]:
/// R_00'(x/y) U_0(x) U_0'(y) = U_0'(y) U_0(x) R_00'(x/y).
inline Residual check_global_YBE(const RMatrixDatum& d, const MatrixFunction& U,
                                 Cplx x, Cplx y,
                                 std::size_t entry_cap = kDefaultEntryCap) {
  const TensorOperator ux = U(x), uy = U(y);
  const LegSpace sp = detail::two_aux_space(ux, entry_cap);
  auto to_aux2 = [&](const TensorOperator& t) {
    std::vector<int> tgt = t.space().legs;
    for (int& l : tgt)
      if (l == kAuxLeg) l = kAux2Leg;
    return embed(t, tgt, sp);
  };
  const TensorOperator u0x = embed(ux, ux.space().legs, sp);
  const TensorOperator u0py = to_aux2(uy);
  const TensorOperator r = embed(d.R(x / y), {kAuxLeg, kAux2Leg}, sp);
  return equation_residual(r * u0x * u0py, u0py * u0x * r);
}

/// Global right reflection relation for cU- on legs [0, W]:
/// R_0'0(x/y) cU-_0(x) R_00'(xy) cU-_0'(y) =
///   cU-_0'(y) R_0'0(xy) cU-_0(x) R_00'(x/y).
inline Residual check_global_RRE(const RMatrixDatum& d, const MatrixFunction& Um,
                                 Cplx x, Cplx y,
                                 std::size_t entry_cap = kDefaultEntryCap) {
  const TensorOperator ux = Um(x), uy = Um(y);
  const LegSpace sp = detail::two_aux_space(ux, entry_cap);
  auto to_aux2 = [&](const TensorOperator& t) {
    std::vector<int> tgt = t.space().legs;
    for (int& l : tgt)
      if (l == kAuxLeg) l = kAux2Leg;
    return embed(t, tgt, sp);
  };
  const TensorOperator u0 = embed(ux, ux.space().legs, sp);
  const TensorOperator u0p = to_aux2(uy);
  auto r00p = [&](Cplx v) { return embed(d.R(v), {kAuxLeg, kAux2Leg}, sp); };
  auto r0p0 = [&](Cplx v) { return embed(d.R(v), {kAux2Leg, kAuxLeg}, sp); };
  const TensorOperator lhs = r0p0(x / y) * u0 * r00p(x * y) * u0p;
  const TensorOperator rhs = u0p * r0p0(x * y) * u0 * r00p(x / y);
  return equation_residual(lhs, rhs);
}

/// Global dual reflection relation for cU+ on legs [0, W]:
/// R_0'0(x/y)^-t cU+_0(x)^{t0} Rt_00'(xy)^t cU+_0'(y)^{t0'} =
///   cU+_0'(y)^{t0'} Rt_0'0(xy)^t cU+_0(x)^{t0} R_00'(x/y)^-t,
/// where t on a two-auxiliary factor transposes both auxiliary legs.
inline Residual check_global_DRE(const RMatrixDatum& d, const MatrixFunction& Up,
                                 Cplx x, Cplx y,
                                 std::size_t entry_cap = kDefaultEntryCap) {
  const TensorOperator ux = Up(x), uy = Up(y);
  const LegSpace sp = detail::two_aux_space(ux, entry_cap);
  auto to_aux2 = [&](const TensorOperator& t) {
    std::vector<int> tgt = t.space().legs;
    for (int& l : tgt)
      if (l == kAuxLeg) l = kAux2Leg;
    return embed(t, tgt, sp);
  };
  auto t_both = [&](const TensorOperator& t) {
    return partial_transpose(partial_transpose(t, kAuxLeg), kAux2Leg);
  };
  const TensorOperator u0_t0 = partial_transpose(embed(ux, ux.space().legs, sp), kAuxLeg);
  const TensorOperator u0p_t0p = partial_transpose(to_aux2(uy), kAux2Leg);
  auto r00p = [&](Cplx v) { return embed(d.R(v), {kAuxLeg, kAux2Leg}, sp); };
  auto r0p0 = [&](Cplx v) { return embed(d.R(v), {kAux2Leg, kAuxLeg}, sp); };
  auto rt00p = [&](Cplx v) { return embed(d.Rtilde(v), {kAuxLeg, kAux2Leg}, sp); };
  auto rt0p0 = [&](Cplx v) { return embed(d.Rtilde(v), {kAux2Leg, kAuxLeg}, sp); };
  const TensorOperator lhs = t_both(r0p0(x / y).inverse()) * u0_t0 *
                             t_both(rt00p(x * y)) * u0p_t0p;
  const TensorOperator rhs = u0p_t0p * t_both(rt0p0(x * y)) * u0_t0 *
                             t_both(r00p(x / y).inverse());
  return equation_residual(lhs, rhs);
}

/// T_12(x) = Tr_0 cU+_01(x) cU-_02(x) as a lazy function on the combined W
/// legs. The inputs must satisfy their global reflection relations; this is
/// checked at two fixed generic points unless disabled.
inline MatrixFunction transfer_general_W(const RMatrixDatum& d,
                                         const MatrixFunction& Uplus,
                                         const MatrixFunction& Uminus,
                                         bool validate_inputs = true,
                                         double input_tol = 1e-6,
                                         std::size_t entry_cap = kDefaultEntryCap) {
  if (Uplus.local_dim() != Uminus.local_dim())
    throw std::invalid_argument("transfer_general_W: local dimension mismatch");
  if (validate_inputs) {
    const Cplx x0 = 1.23 * std::polar(1.0, 0.7);
    const Cplx y0 = 0.91 * std::polar(1.0, -1.1);
    const Residual rre = check_global_RRE(d, Uminus, x0, y0, entry_cap);
    if (rre.relative > input_tol)
      throw std::invalid_argument(
          "transfer_general_W: minus factor fails its reflection relation "
          "(relative residual " + std::to_string(rre.relative) + ")");
    const Residual dre = check_global_DRE(d, Uplus, x0, y0, entry_cap);
    if (dre.relative > input_tol)
      throw std::invalid_argument(
          "transfer_general_W: plus factor fails its reflection relation "
          "(relative residual " + std::to_string(dre.relative) + ")");
  }
  const int arity = Uplus.arity() - 1 + Uminus.arity() - 1;
  return MatrixFunction(Uplus.local_dim(), arity, [Uplus, Uminus, entry_cap](Cplx x) {
    return trace_general_transfer(Uplus(x), Uminus(x), entry_cap);
  });
}

}  // namespace reflectlab
