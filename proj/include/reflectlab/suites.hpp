#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "reflectlab/chain.hpp"
#include "reflectlab/config.hpp"
#include "reflectlab/k_matrix.hpp"
#include "reflectlab/qkz.hpp"
#include "reflectlab/r_matrix.hpp"
#include "reflectlab/reflection_maps.hpp"
#include "reflectlab/report.hpp"
#include "reflectlab/sectors.hpp"
#include "reflectlab/transfer.hpp"

namespace reflectlab {
namespace suites {

inline std::string indexed(const std::string& prefix, int k) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", k);
  return prefix + "_" + buf;
}

struct Ctx {
  const RunConfig& cfg;
  std::string suite;
  SplitMix64 rng;
  std::vector<CheckRecord>* out;

  Ctx(const RunConfig& c, std::string name, std::vector<CheckRecord>* sink)
      : cfg(c),
        suite(std::move(name)),
        rng(c.chain.seed ^ fnv1a64(name)),
        out(sink) {}

  double tol(double def) const {
    return cfg.tol_override ? *cfg.tol_override : def;
  }

  void add(const std::string& id, const std::string& identity, Json params,
           const Residual& r, double threshold, bool degenerate = false) {
    CheckRecord rec =
        make_record(suite, id, identity, std::move(params), r, threshold);
    rec.degenerate = degenerate;
    if (degenerate) rec.pass = false;
    out->push_back(std::move(rec));
  }
};

inline Json pt(Cplx x) { return to_json(x); }

inline KFamilyParams resolved_kplus(const RunConfig& cfg) {
  KFamilyParams p = cfg.kplus;
  if (p.xi.size() != static_cast<std::size_t>(cfg.chain.n / 2))
    p.xi = default_xi_plus(cfg.chain.n);
  return p;
}

inline KFamilyParams resolved_kminus(const RunConfig& cfg) {
  KFamilyParams p = cfg.kminus;
  if (p.xi.size() != static_cast<std::size_t>(cfg.chain.n / 2))
    p.xi = default_xi_minus(cfg.chain.n);
  return p;
}

inline Json shape_params(const RunConfig& cfg) {
  return Json{{"n", cfg.chain.n}, {"N", cfg.chain.N}, {"q", pt(cfg.chain.q)}};
}

// ---------------------------------------------------------------------------
// local-condition suites
// ---------------------------------------------------------------------------

inline void run_ybe(Ctx& c) {
  const RMatrixDatum d = make_R(c.cfg.chain.n, c.cfg.chain.q);
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = c.rng.annulus(), y = c.rng.annulus();
    c.add(indexed("pair", t),
          "R12(x/y) R13(x) R23(y) = R23(y) R13(x) R12(x/y)",
          Json{{"n", d.n}, {"x", pt(x)}, {"y", pt(y)}}, check_YBE(d, x, y),
          c.tol(1e-11));
  }
}

inline void run_twisted_ybe(Ctx& c) {
  const RMatrixDatum d = make_R(c.cfg.chain.n, c.cfg.chain.q);
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = sample_spectral_point(c.rng, [&](Cplx v) {
      return d.Rtilde.pole_distance(v) < kPoleRejectRadius;
    });
    const Cplx y = sample_spectral_point(c.rng, [&](Cplx v) {
      return d.Rtilde.pole_distance(v) < kPoleRejectRadius ||
             d.R.pole_distance(x / v, true) < kPoleRejectRadius;
    });
    c.add(indexed("pair", t),
          "R12(x/y)^-1 Rt13(x) Rt23(y) = Rt23(y) Rt13(x) R12(x/y)^-1",
          Json{{"n", d.n}, {"x", pt(x)}, {"y", pt(y)}},
          check_twisted_YBE(d, x, y), c.tol(1e-9));
  }
}

inline void run_unitarity(Ctx& c) {
  const RMatrixDatum d = make_R(c.cfg.chain.n, c.cfg.chain.q);
  const MatrixFunction kfam = make_K_family(c.cfg.chain.n, resolved_kplus(c.cfg));
  const KMatrixDatum kp = make_K_plus(d, resolved_kplus(c.cfg));
  const KMatrixDatum km = make_K_minus(d, resolved_kminus(c.cfg));
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = c.rng.annulus();
    const Json params{{"n", d.n}, {"x", pt(x)}};
    c.add(indexed("r", t), "R(x) R21(1/x) ~ Id", params, check_unitarity(d, x),
          c.tol(1e-12));
    c.add(indexed("k_family", t), "K(x) K(1/x) ~ Id", params,
          check_boundary_unitarity(kfam, x), c.tol(1e-12));
    c.add(indexed("k_plus", t), "K+(x) K+(1/x) ~ Id", params,
          check_boundary_unitarity(kp.K, x), c.tol(1e-12));
    c.add(indexed("k_minus", t), "K-(x) K-(1/x) ~ Id", params,
          check_boundary_unitarity(km.K, x), c.tol(1e-12));
  }
  // boundary regularity at +-1, with the degenerate zero-multiple flag
  for (double s : {1.0, -1.0}) {
    const RegularityResult rr = check_boundary_regularity(kfam, s);
    c.add(s > 0 ? "regularity_plus1" : "regularity_minus1", "K(+-1) ~ Id",
          Json{{"n", d.n}, {"x", pt(Cplx(s))}}, rr.residual, c.tol(1e-13),
          rr.degenerate);
  }
  const Residual reg = proportionality(d.R(Cplx(1.0)), d.P);
  c.add("regularity_r", "R(1) ~ P", Json{{"n", d.n}}, reg, c.tol(1e-13));
}

inline void run_crossing(Ctx& c) {
  const RMatrixDatum d = make_R(c.cfg.chain.n, c.cfg.chain.q);
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = sample_spectral_point(c.rng, [&](Cplx v) {
      return d.R.pole_distance(d.r * d.r * v, true) < kPoleRejectRadius ||
             d.Rtilde.pole_distance(v) < kPoleRejectRadius;
    });
    const Json params{{"n", d.n}, {"x", pt(x)}};
    c.add(indexed("crossing", t), "M2^-1 R12(r^2 x)^-1 M2 ~ Rt12(x)", params,
          check_crossing(d, x), c.tol(1e-9));
    c.add(indexed("rmm", t), "[R(x), M x M] = 0", params,
          check_crossing_compatibility(d, x), c.tol(1e-12));
    c.add(indexed("rjj", t), "R12(x) J1 J2 = J1 J2 R21(x)", params,
          check_flip_conjugation(d, x), c.tol(1e-12));
    c.add(indexed("rtilde_involution", t), "Rtilde of Rtilde = R", params,
          check_rtilde_involution(d, x), c.tol(1e-10));
  }
}

inline void run_reflection_lre(Ctx& c) {
  const RMatrixDatum d = make_R(c.cfg.chain.n, c.cfg.chain.q);
  const MatrixFunction kfam = make_K_family(c.cfg.chain.n, resolved_kplus(c.cfg));
  const KMatrixDatum kp = make_K_plus(d, resolved_kplus(c.cfg));
  const char* lre =
      "R12(x/y) K1(x) R21(xy) K2(y) = K2(y) R12(xy) K1(x) R21(x/y)";
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = c.rng.annulus(), y = c.rng.annulus();
    const Json params{{"n", d.n}, {"x", pt(x)}, {"y", pt(y)}};
    c.add(indexed("family", t), lre, params,
          check_reflection(d, kfam, ReflectionKind::LRE, x, y), c.tol(1e-9));
    c.add(indexed("k_plus", t), lre, params,
          check_reflection(d, kp.K, ReflectionKind::LRE, x, y), c.tol(1e-9));
  }
}

inline void run_reflection_rre(Ctx& c) {
  const RMatrixDatum d = make_R(c.cfg.chain.n, c.cfg.chain.q);
  const KMatrixDatum km = make_K_minus(d, resolved_kminus(c.cfg));
  const char* rre =
      "R21(x/y) K1(x) R12(xy) K2(y) = K2(y) R21(xy) K1(x) R12(x/y)";
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = c.rng.annulus(), y = c.rng.annulus();
    c.add(indexed("k_minus", t), rre,
          Json{{"n", d.n}, {"x", pt(x)}, {"y", pt(y)}},
          check_reflection(d, km.K, ReflectionKind::RRE, x, y), c.tol(1e-9));
  }
}

inline Cplx sample_dre_x(Ctx& c, const RMatrixDatum& d) {
  return sample_spectral_point(c.rng, [&](Cplx v) {
    return d.Rtilde.pole_distance(v * v) < kPoleRejectRadius;
  });
}

inline Cplx sample_dre_y(Ctx& c, const RMatrixDatum& d, Cplx x) {
  return sample_spectral_point(c.rng, [&](Cplx v) {
    return d.Rtilde.pole_distance(v * v) < kPoleRejectRadius ||
           d.R.pole_distance(x / v, true) < kPoleRejectRadius ||
           d.Rtilde.pole_distance(x * v) < kPoleRejectRadius;
  });
}

inline void run_reflection_dre(Ctx& c) {
  const RMatrixDatum d = make_R(c.cfg.chain.n, c.cfg.chain.q);
  const KMatrixDatum kp = make_K_plus(d, resolved_kplus(c.cfg));
  const char* dre =
      "R12(x/y)^-1 K1(x) Rt21(xy) K2(y) = K2(y) Rt12(xy) K1(x) R21(x/y)^-1";
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = sample_dre_x(c, d);
    const Cplx y = sample_dre_y(c, d, x);
    c.add(indexed("k_prime", t), dre,
          Json{{"n", d.n}, {"x", pt(x)}, {"y", pt(y)}},
          check_reflection(d, *kp.Kprime, ReflectionKind::DRE, x, y),
          c.tol(1e-9));
  }
}

inline void run_refl_maps(Ctx& c) {
  const int n = c.cfg.chain.n;
  const RMatrixDatum d = make_R(n, c.cfg.chain.q);
  const MatrixFunction kfam = make_K_family(n, resolved_kplus(c.cfg));
  const KMatrixDatum kp = make_K_plus(d, resolved_kplus(c.cfg));
  const KMatrixDatum km = make_K_minus(d, resolved_kminus(c.cfg));
  const TensorOperator jinv(d.J.space(), d.J.entries().inverse());

  const MatrixFunction chi_round = chi_J(chi_J(kfam, d.J), jinv);
  const MatrixFunction chi_mapped = chi_J(kfam, d.J);
  const MatrixFunction psi_mapped = psi_Mr(km.K, d.M, d.r);
  const MatrixFunction psi_round = psi_Mr_inverse(psi_mapped, d.M, d.r);
  const MatrixFunction phi_round = phi_R(*kp.Kprime, d, /*use_rtilde=*/false);
  const MatrixFunction bcross = boundary_crossing(kp.K, d);
  const LegSpace work(n, {0, 1});

  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = c.rng.annulus();
    const Json px{{"n", n}, {"x", pt(x)}};
    c.add(indexed("chi_round", t), "chi_J^-1 . chi_J = id", px,
          equation_residual(chi_round(x), kfam(x)), c.tol(1e-12));

    const Cplx xp = sample_spectral_point(c.rng, [&](Cplx v) {
      return psi_mapped.pole_distance(v) < kPoleRejectRadius ||
             psi_round.pole_distance(v) < kPoleRejectRadius;
    });
    c.add(indexed("psi_round", t), "psi_{M,r}^-1 . psi_{M,r} = id",
          Json{{"n", n}, {"x", pt(xp)}},
          equation_residual(psi_round(xp), km.K(xp)), c.tol(1e-9));

    const Cplx xf = sample_dre_x(c, d);
    c.add(indexed("phi_round", t), "phi_R . phi_Rtilde = id",
          Json{{"n", n}, {"x", pt(xf)}},
          equation_residual(phi_round(xf), kp.K(xf)), c.tol(1e-9));
    c.add(indexed("kprime_closed", t),
          "phi_Rtilde(K+) = K' closed form (Delta_q-twisted family)",
          Json{{"n", n}, {"x", pt(xf)}},
          equation_residual((*kp.Kprime)(xf), (*kp.Kprime_closed)(xf)),
          c.tol(1e-9));

    // boundary crossing: displayed trace formula and composite agree
    const Cplx xb = sample_spectral_point(c.rng, [&](Cplx v) {
      return bcross.pole_distance(v) < kPoleRejectRadius;
    });
    const TensorOperator head =
        embed(jinv * kp.K(d.r * xb).inverse() * d.J * d.M, {0}, work);
    const TensorOperator tail =
        embed(d.P, {0, 1}, work) * embed(d.R(xb * xb), {0, 1}, work);
    c.add(indexed("bcross_formula", t),
          "K1(x) = Tr_0 J0^-1 K0(rx)^-1 J0 M0 P01 R01(x^2)",
          Json{{"n", n}, {"x", pt(xb)}},
          equation_residual(bcross(xb), partial_trace(head * tail, 0)),
          c.tol(1e-10));
  }

  // map targets: each image satisfies its reflection relation
  const char* fig = "reflection-set bijections preserve the target relation";
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = c.rng.annulus(), y = c.rng.annulus();
    const Json pxy{{"n", n}, {"x", pt(x)}, {"y", pt(y)}};
    c.add(indexed("chi_target", t), fig, pxy,
          check_reflection(d, chi_mapped, ReflectionKind::RRE, x, y),
          c.tol(1e-9));
    const Cplx xd = sample_spectral_point(c.rng, [&](Cplx v) {
      return psi_mapped.pole_distance(v) < kPoleRejectRadius ||
             d.Rtilde.pole_distance(v * v) < kPoleRejectRadius;
    });
    const Cplx yd = sample_spectral_point(c.rng, [&](Cplx v) {
      return psi_mapped.pole_distance(v) < kPoleRejectRadius ||
             d.Rtilde.pole_distance(v * v) < kPoleRejectRadius ||
             d.R.pole_distance(xd / v, true) < kPoleRejectRadius ||
             d.Rtilde.pole_distance(xd * v) < kPoleRejectRadius;
    });
    c.add(indexed("psi_target", t), fig, Json{{"n", n}, {"x", pt(xd)}, {"y", pt(yd)}},
          check_reflection(d, psi_mapped, ReflectionKind::DRE, xd, yd),
          c.tol(1e-9));
    const Cplx xb = sample_spectral_point(c.rng, [&](Cplx v) {
      return bcross.pole_distance(v) < kPoleRejectRadius;
    });
    const Cplx yb = sample_spectral_point(c.rng, [&](Cplx v) {
      return bcross.pole_distance(v) < kPoleRejectRadius;
    });
    c.add(indexed("bcross_lre", t), fig, Json{{"n", n}, {"x", pt(xb)}, {"y", pt(yb)}},
          check_reflection(d, bcross, ReflectionKind::LRE, xb, yb), c.tol(1e-9));
  }

  // phi_R linearity
  SplitMix64& rng = c.rng;
  const MatrixFunction k2 = make_K_family(n, resolved_kminus(c.cfg));
  for (int t = 0; t < 5; ++t) {
    const Cplx a = rng.box(), b = rng.box();
    MatrixFunction combo(n, 1, [kfam, k2, a, b](Cplx v) {
      return a * kfam.eval_direct(v) + b * k2.eval_direct(v);
    });
    const Cplx x = rng.annulus();
    const TensorOperator want = a * phi_R(kfam, d)(x) + b * phi_R(k2, d)(x);
    c.add(indexed("phi_linear", t), "phi_R(a K1 + b K2) = a phi_R(K1) + b phi_R(K2)",
          Json{{"n", n}, {"x", pt(x)}, {"a", pt(a)}, {"b", pt(b)}},
          equation_residual(phi_R(combo, d)(x), want), c.tol(1e-12));
  }
}

// ---------------------------------------------------------------------------
// chain-level suites
// ---------------------------------------------------------------------------

inline SpinChain build_chain(const RunConfig& cfg) { return make_chain(cfg.chain); }

inline Cplx sample_transfer_x(Ctx& c, const SpinChain& ch) {
  return sample_spectral_point(c.rng, [&](Cplx x) {
    for (int i = 1; i <= ch.N(); ++i) {
      if (ch.R.R.pole_distance(1.0 / (x * ch.z(i)), true) < kPoleRejectRadius)
        return true;
      if (ch.R.R.pole_distance(x / ch.z(i), true) < kPoleRejectRadius)
        return true;
    }
    return ch.R.Rtilde.pole_distance(x * x) < kPoleRejectRadius;
  });
}

inline void run_commute_periodic(Ctx& c) {
  const SpinChain ch = build_chain(c.cfg);
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = c.rng.annulus(), y = c.rng.annulus();
    c.add(indexed("pair", t), "[T(x;z), T(y;z)] = 0",
          Json{{"n", ch.n()}, {"N", ch.N()}, {"x", pt(x)}, {"y", pt(y)}},
          commutator_residual(transfer_periodic(ch, x), transfer_periodic(ch, y)),
          c.tol(1e-10));
  }
}

inline void run_commute_boundary(Ctx& c) {
  const SpinChain ch = build_chain(c.cfg);
  const KMatrixDatum kp = make_K_plus(ch.R, resolved_kplus(c.cfg));
  const KMatrixDatum km = make_K_minus(ch.R, resolved_kminus(c.cfg));
  for (int t = 0; t < c.cfg.trials; ++t) {
    const Cplx x = sample_transfer_x(c, ch);
    const Cplx y = sample_transfer_x(c, ch);
    c.add(indexed("pair", t), "[cT(x;z), cT(y;z)] = 0",
          Json{{"n", ch.n()}, {"N", ch.N()}, {"x", pt(x)}, {"y", pt(y)}},
          commutator_residual(transfer_boundary(ch, *kp.Kprime, km.K, x),
                              transfer_boundary(ch, *kp.Kprime, km.K, y)),
          c.tol(1e-9));
  }
}

inline void run_folding(Ctx& c) {
  RunConfig cfg = c.cfg;
  cfg.chain.N = std::min(std::max(cfg.chain.N, 2), 3);  // two-auxiliary budget
  cfg.chain.z.clear();
  const SpinChain ch = build_chain(cfg);
  const KMatrixDatum kp = make_K_plus(ch.R, resolved_kplus(cfg));
  const KMatrixDatum km = make_K_minus(ch.R, resolved_kminus(cfg));
  const int N = ch.N();
  const int split = 1;  // W+ = leg 1, W- = legs 2..N
  const MatrixFunction Uplus = partial_monodromy(ch, 1, split);
  const MatrixFunction Uminus = partial_monodromy(ch, split + 1, N);
  const MatrixFunction foldp = fold_plus(Uplus, *kp.Kprime);
  const MatrixFunction foldm = fold_minus(Uminus, km.K);
  MatrixFunction U(ch.n(), N + 1,
                   [ch](Cplx x) { return monodromy_periodic(ch, x); });
  MatrixFunction cU(ch.n(), N + 1, [ch, km](Cplx x) {
    return boundary_monodromy(ch, km.K, x);
  });
  const Json shape{{"n", ch.n()}, {"N", N}};

  // the two-auxiliary relations square the working dimension
  int reps = std::min(c.cfg.trials, 10);
  if (ch.aux_space().dim() >= 512) reps = std::min(reps, 3);
  for (int t = 0; t < reps; ++t) {
    const Cplx x = sample_transfer_x(c, ch);
    const Cplx y = sample_transfer_x(c, ch);
    Json pxy = shape;
    pxy["x"] = pt(x);
    pxy["y"] = pt(y);
    c.add(indexed("monodromy_exchange", t),
          "R00'(x/y) U0(x) U0'(y) = U0'(y) U0(x) R00'(x/y)", pxy,
          check_global_YBE(ch.R, U, x, y), c.tol(1e-10));
    c.add(indexed("bmonodromy_rre", t),
          "R0'0(x/y) cU0(x) R00'(xy) cU0'(y) = cU0'(y) R0'0(xy) cU0(x) R00'(x/y)",
          pxy, check_global_RRE(ch.R, cU, x, y), c.tol(1e-9));
    c.add(indexed("uplus_dre", t),
          "folded cU+ satisfies the dual reflection relation", pxy,
          check_global_DRE(ch.R, foldp, x, y), c.tol(1e-9));

    Json px = shape;
    px["x"] = pt(x);
    c.add(indexed("bmonodromy_fold", t),
          "cU-(x) = U(1/x)^-1 K-_0(x) U(x)", px,
          equation_residual(boundary_monodromy(ch, km.K, x),
                            boundary_monodromy_folded(ch, km.K, x)),
          c.tol(1e-10));
    c.add(indexed("pair_trace", t),
          "Tr_0 cU+_01(x) cU-_02(x) = Tr_0 K'_0(x) U(1/x)^-1 K-_0(x) U(x)", px,
          equation_residual(trace_general_transfer(foldp(x), foldm(x)),
                            transfer_boundary(ch, *kp.Kprime, km.K, x)),
          c.tol(1e-10));
    c.add(indexed("pair_commute", t),
          "[Tr_0 cU+ cU- (x), Tr_0 cU+ cU- (y)] = 0", pxy,
          commutator_residual(trace_general_transfer(foldp(x), foldm(x)),
                              trace_general_transfer(foldp(y), foldm(y))),
          c.tol(1e-9));
    c.add(indexed("periodic_pair_commute", t),
          "[Tr_0 U+ U- (x), Tr_0 U+ U- (y)] = 0 for two exchange solutions",
          pxy,
          commutator_residual(trace_general_transfer(Uplus(x), Uminus(x)),
                              trace_general_transfer(Uplus(y), Uminus(y))),
          c.tol(1e-10));

    // trivial W+: the pair trace degenerates to the boundary transfer matrix
    const TensorOperator kp0 =
        embed((*kp.Kprime)(x), {kAuxLeg}, LegSpace(ch.n(), {kAuxLeg}));
    c.add(indexed("trivial_wplus", t),
          "W+ trivial: Tr_0 K'_0(x) cU-_0(x) = cT(x)", px,
          equation_residual(trace_general_transfer(kp0, boundary_monodromy(ch, km.K, x)),
                            transfer_boundary(ch, *kp.Kprime, km.K, x)),
          c.tol(1e-12));
  }
}

inline void run_qkz_consistency(Ctx& c) {
  const SpinChain ch = build_chain(c.cfg);
  const Cplx p = ch.cfg.sqrt_p * ch.cfg.sqrt_p;
  for (int i = 1; i <= ch.N(); ++i)
    for (int j = 1; j <= ch.N(); ++j) {
      Json params = shape_params(c.cfg);
      params["i"] = i;
      params["j"] = j;
      params["p"] = pt(p);
      c.add("flat_" + std::to_string(i) + "_" + std::to_string(j),
            "A_i(p^e_j z;p) A_j(z;p) = A_j(p^e_i z;p) A_i(z;p)", params,
            transport_consistency_periodic(ch, i, j, p), c.tol(1e-9));
    }
  for (int i = 1; i <= ch.N(); ++i)
    for (int j = i + 1; j <= ch.N(); ++j) {
      Json params = shape_params(c.cfg);
      params["i"] = i;
      params["j"] = j;
      c.add("commute_" + std::to_string(i) + "_" + std::to_string(j),
            "[A_i(z;1), A_j(z;1)] = 0", params,
            commutator_residual(transport_periodic(ch, i, Cplx(1.0)),
                                transport_periodic(ch, j, Cplx(1.0))),
            c.tol(1e-9));
    }
}

inline void run_bqkz_consistency(Ctx& c) {
  const SpinChain ch = build_chain(c.cfg);
  const KMatrixDatum kp = make_K_plus(ch.R, resolved_kplus(c.cfg));
  const KMatrixDatum km = make_K_minus(ch.R, resolved_kminus(c.cfg));
  const Cplx sqrt_p = ch.cfg.sqrt_p;
  for (int i = 1; i <= ch.N(); ++i)
    for (int j = 1; j <= ch.N(); ++j) {
      Json params = shape_params(c.cfg);
      params["i"] = i;
      params["j"] = j;
      params["sqrt_p"] = pt(sqrt_p);
      c.add("flat_" + std::to_string(i) + "_" + std::to_string(j),
            "cA_i(p^e_j z;p) cA_j(z;p) = cA_j(p^e_i z;p) cA_i(z;p)", params,
            transport_consistency_boundary(ch, kp.K, km.K, i, j, sqrt_p),
            c.tol(1e-9));
    }
  std::vector<TensorOperator> at_unit;
  for (int i = 1; i <= ch.N(); ++i)
    at_unit.push_back(transport_boundary(ch, kp.K, km.K, i, Cplx(1.0)));
  for (int i = 1; i <= ch.N(); ++i)
    for (int j = 1; j <= ch.N(); ++j) {
      if (i == j) continue;
      Json params = shape_params(c.cfg);
      params["i"] = i;
      params["j"] = j;
      const TensorOperator& ai = at_unit[static_cast<std::size_t>(i - 1)];
      const TensorOperator& aj = at_unit[static_cast<std::size_t>(j - 1)];
      if (i < j)
        c.add("commute_" + std::to_string(i) + "_" + std::to_string(j),
              "[cA_i(z;1), cA_j(z;1)] = 0", params, commutator_residual(ai, aj),
              c.tol(1e-9));
      c.add("commute_inv_" + std::to_string(i) + "_" + std::to_string(j),
            "[cA_i(z;1), cA_j(z;1)^-1] = 0", params,
            commutator_residual(ai, aj.inverse()), c.tol(1e-9));
    }
}

inline void run_interpolation(Ctx& c) {
  const SpinChain ch = build_chain(c.cfg);
  const KMatrixDatum kp = make_K_plus(ch.R, resolved_kplus(c.cfg));
  const KMatrixDatum km = make_K_minus(ch.R, resolved_kminus(c.cfg));
  const MatrixFunction& kprime = *kp.Kprime;
  const InterpolationReport rep =
      interpolation_identities(ch, kprime, kp.K, km.K);
  for (int i = 1; i <= ch.N(); ++i) {
    Json params = shape_params(c.cfg);
    params["i"] = i;
    params["z_i"] = pt(ch.z(i));
    c.add("periodic_" + std::to_string(i), "T(z_i;z) ~ A_i(z;1)", params,
          rep.periodic[static_cast<std::size_t>(i - 1)], c.tol(1e-8));
    c.add("boundary_" + std::to_string(i), "cT(z_i;z) ~ cA_i(z;1)", params,
          rep.boundary[static_cast<std::size_t>(i - 1)], c.tol(1e-8));
    c.add("boundary_inv_" + std::to_string(i), "cT(1/z_i;z) ~ cA_i(z;1)^-1",
          params, rep.boundary_inverse[static_cast<std::size_t>(i - 1)],
          c.tol(1e-8));
  }

  // special values at +-1: cT(+-1) ~ (Tr K'(+-1)) Id
  for (double s : {1.0, -1.0}) {
    const std::string tag = s > 0 ? "plus1" : "minus1";
    const TensorOperator t = transfer_boundary(ch, kprime, km.K, Cplx(s));
    const Residual prop =
        proportionality(t, TensorOperator::identity(t.space()));
    const RegularityResult reg = check_boundary_regularity(km.K, s);
    Json params = shape_params(c.cfg);
    params["x"] = pt(Cplx(s));
    c.add("special_" + tag, "cT(+-1;z) ~ (Tr K'(+-1)) Id", params, prop,
          c.tol(1e-9), reg.degenerate);
    if (!reg.degenerate) {
      const Cplx predicted = reg.residual.scalar * kprime(Cplx(s)).trace();
      Residual match;
      match.absolute = std::abs(prop.scalar - predicted);
      match.relative = match.absolute / std::max(std::abs(predicted), kEpsFloor);
      match.scalar = prop.scalar;
      c.add("special_" + tag + "_scalar",
            "fitted multiple of cT(+-1) = K- regularity multiple x Tr K'(+-1)",
            params, match, c.tol(1e-8));
    }
  }

  // special values at +-r^-1: cT(+-1/r) ~ (Tr K-(+-1/r) M) Id
  const LegSpace two(ch.n(), {1, 2});
  for (double s : {1.0, -1.0}) {
    const std::string tag = s > 0 ? "rinv_plus" : "rinv_minus";
    const Cplx x0 = s / ch.R.r;
    const TensorOperator t = transfer_boundary(ch, kprime, km.K, x0);
    const Residual prop =
        proportionality(t, TensorOperator::identity(t.space()));
    Json params = shape_params(c.cfg);
    params["x"] = pt(x0);
    c.add("special_" + tag, "cT(+-1/r;z) ~ (Tr K-(+-1/r) M) Id", params, prop,
          c.tol(1e-9));

    const Cplx s0 = proportionality(kprime(x0), ch.R.M).scalar;
    Cplx predicted = s0 * (km.K(x0) * ch.R.M).trace();
    for (int i = 1; i <= ch.N(); ++i) {
      const Cplx u = x0 / ch.z(i);
      const TensorOperator m0t = embed(ch.R.M.transpose(), {1}, two);
      const TensorOperator lhs = m0t * partial_transpose(ch.R.R(u), 1).inverse();
      const TensorOperator rhs =
          partial_transpose(ch.R.R(ch.R.r * ch.R.r * u).inverse(), 1) * m0t;
      predicted /= proportionality(lhs, rhs).scalar;
    }
    Residual match;
    match.absolute = std::abs(prop.scalar - predicted);
    match.relative = match.absolute / std::max(std::abs(predicted), kEpsFloor);
    match.scalar = prop.scalar;
    c.add("special_" + tag + "_scalar",
          "fitted multiple of cT(+-1/r) matches the crossing-multiple chain",
          params, match, c.tol(1e-8));
  }

  // modified transfer matrix: proportional to the unmodified one
  for (int t = 0; t < std::min(c.cfg.trials, 10); ++t) {
    const Cplx x = sample_transfer_x(c, ch);
    Json params = shape_params(c.cfg);
    params["x"] = pt(x);
    c.add(indexed("modified_prop", t), "cTmod(x;z) ~ cT(x;z)", params,
          proportionality(transfer_boundary_modified(ch, kprime, km.K, x),
                          transfer_boundary(ch, kprime, km.K, x)),
          c.tol(1e-9));
  }

  // the hidden multiple depends only on the products x z_i
  {
    const Cplx scale(1.23, 0.4);
    ChainConfig cfg2 = ch.cfg;
    for (Cplx& zi : cfg2.z) zi /= scale;
    const SpinChain ch2{cfg2, ch.R, ch.D};
    const Cplx x = sample_transfer_x(c, ch);
    const Cplx m1 =
        proportionality(transfer_boundary_modified(ch, kprime, km.K, x),
                        transfer_boundary(ch, kprime, km.K, x))
            .scalar;
    const Cplx m2 = proportionality(
                        transfer_boundary_modified(ch2, kprime, km.K, scale * x),
                        transfer_boundary(ch2, kprime, km.K, scale * x))
                        .scalar;
    Residual match;
    match.absolute = std::abs(m1 - m2);
    match.relative = match.absolute / std::max(std::abs(m1), kEpsFloor);
    match.scalar = m1;
    c.add("modified_scalar_products",
          "the cTmod/cT multiple is invariant under x -> cx, z -> z/c",
          shape_params(c.cfg), match, c.tol(1e-9));
  }

  // polynomial degrees: T has degree N, cTmod degree 2N+4
  {
    MatrixFunction tf(ch.n(), ch.N(),
                      [ch](Cplx x) { return transfer_periodic(ch, x); });
    c.add("degree_T", "T(x;z) is polynomial of degree N in x",
          shape_params(c.cfg), degree_check(tf, ch.N(), c.rng.annulus()),
          c.tol(1e-8));
    MatrixFunction tm(ch.n(), ch.N(), [ch, kprime, km](Cplx x) {
      return transfer_boundary_modified(ch, kprime, km.K, x);
    });
    c.add("degree_Tmod", "cTmod(x;z) is polynomial of degree 2N+4 in x",
          shape_params(c.cfg),
          degree_check(tm, 2 * ch.N() + 4, c.rng.annulus()), c.tol(1e-8));
  }

  // commutators at fresh points outside the interpolation sets
  std::vector<Cplx> interp_points{Cplx(0.0), Cplx(1.0), Cplx(-1.0),
                                  1.0 / ch.R.r, -1.0 / ch.R.r};
  for (int i = 1; i <= ch.N(); ++i) {
    interp_points.push_back(ch.z(i));
    interp_points.push_back(1.0 / ch.z(i));
  }
  auto fresh = [&](Cplx v) {
    for (const Cplx& w : interp_points)
      if (std::abs(v - w) < kPoleRejectRadius) return true;
    return false;
  };
  for (int t = 0; t < std::min(c.cfg.trials, 10); ++t) {
    const Cplx x = sample_spectral_point(c.rng, fresh);
    const Cplx y = sample_spectral_point(c.rng, fresh);
    Json params = shape_params(c.cfg);
    params["x"] = pt(x);
    params["y"] = pt(y);
    c.add(indexed("fresh_commute_T", t),
          "[T(x;z), T(y;z)] = 0 off the interpolation set", params,
          commutator_residual(transfer_periodic(ch, x), transfer_periodic(ch, y)),
          c.tol(1e-10));
    c.add(indexed("fresh_commute_Tmod", t),
          "[cTmod(x;z), cTmod(y;z)] = 0 off the interpolation set", params,
          commutator_residual(transfer_boundary_modified(ch, kprime, km.K, x),
                              transfer_boundary_modified(ch, kprime, km.K, y)),
          c.tol(1e-9));
  }
}

inline void run_sectors(Ctx& c) {
  const SpinChain ch = build_chain(c.cfg);
  const KMatrixDatum kp = make_K_plus(ch.R, resolved_kplus(c.cfg));
  const KMatrixDatum km = make_K_minus(ch.R, resolved_kminus(c.cfg));
  const int n = ch.n(), N = ch.N();
  const auto sym = enumerate_sectors(n, N, SectorKind::symmetric);
  const auto hyper = enumerate_sectors(n, N, SectorKind::hyperoctahedral);

  auto partition_defect = [n, N](const std::vector<Sector>& secs) {
    std::size_t total = 0, expect = 1;
    for (int i = 0; i < N; ++i) expect *= static_cast<std::size_t>(n);
    std::vector<char> seen(expect, 0);
    double defect = 0.0;
    for (const auto& s : secs)
      for (std::size_t idx : s.basis_indices) {
        ++total;
        if (seen[idx]) defect += 1.0;
        seen[idx] = 1;
      }
    if (total != expect) defect += 1.0;
    return defect;
  };
  Residual part_sym;
  part_sym.absolute = part_sym.relative = partition_defect(sym);
  c.add("partition_symmetric", "permutation orbits partition the basis tuples",
        shape_params(c.cfg), part_sym, c.tol(0.0));
  Residual part_hyp;
  part_hyp.absolute = part_hyp.relative = partition_defect(hyper);
  c.add("partition_hyperoctahedral",
        "signed-permutation orbits partition the basis tuples",
        shape_params(c.cfg), part_hyp, c.tol(0.0));

  // block invariance of the unit-shift transport matrices
  for (int i = 1; i <= N; ++i) {
    Json params = shape_params(c.cfg);
    params["i"] = i;
    Residual ra;
    ra.absolute = ra.relative =
        block_invariance_defect(transport_periodic(ch, i, Cplx(1.0)), sym);
    c.add("block_A_" + std::to_string(i),
          "A_i(z;1) preserves each permutation-orbit block", params, ra,
          c.tol(1e-12));
    const TensorOperator ai = transport_boundary(ch, kp.K, km.K, i, Cplx(1.0));
    Residual rb;
    rb.absolute = rb.relative = block_invariance_defect(ai, hyper);
    c.add("block_cA_" + std::to_string(i),
          "cA_i(z;1) preserves each signed-orbit block", params, rb,
          c.tol(1e-12));
    TensorOperator inv = ai.inverse();
    const TensorOperator inv_unit = (1.0 / inv.norm()) * inv;
    Residual rc;
    rc.absolute = rc.relative = block_invariance_defect(inv_unit, hyper);
    c.add("block_cA_inv_" + std::to_string(i),
          "cA_i(z;1)^-1 preserves each signed-orbit block", params, rc,
          c.tol(1e-12));
  }

  // closed-form eigenvalues of T(0;z) on each permutation orbit
  const TensorOperator t0 = transfer_periodic(ch, Cplx(0.0));
  const TensorOperator r0 = ch.R.R(Cplx(0.0));
  auto rep_string = [](const std::vector<int>& rep) {
    std::string s;
    for (std::size_t k = 0; k < rep.size(); ++k) {
      if (k) s += "-";
      s += std::to_string(rep[k]);
    }
    return s;
  };
  for (const Sector& sec : sym) {
    const Cplx want = scalar_eigenvalue_periodic(r0, ch.D, sec.representative);
    double worst = 0.0;
    for (std::size_t idx : sec.basis_indices) {
      Eigen::VectorXcd col = t0.entries().col(static_cast<Eigen::Index>(idx));
      col(static_cast<Eigen::Index>(idx)) -= want;
      worst = std::max(worst, col.norm() / std::max(std::abs(want), kEpsFloor));
    }
    Residual r;
    r.absolute = r.relative = worst;
    r.scalar = want;
    Json params = shape_params(c.cfg);
    params["sector"] = rep_string(sec.representative);
    c.add("scalar_periodic_" + rep_string(sec.representative),
          "T(0;z) acts on the orbit block as sum_a d_a^a prod_i r_(a b_i)^(a b_i)",
          params, r, c.tol(1e-10));
  }

  // closed-form eigenvalues of cTmod(0;z) on each signed orbit
  const TensorOperator tm0 =
      transfer_boundary_modified(ch, *kp.Kprime, km.K, Cplx(0.0));
  const TensorOperator k0 = km.K(Cplx(0.0));
  const TensorOperator l0 = (*kp.Kprime)(Cplx(0.0));
  for (const Sector& sec : hyper) {
    const Cplx want = scalar_eigenvalue_boundary(r0, k0, l0, sec.representative);
    double worst = 0.0;
    for (std::size_t idx : sec.basis_indices) {
      Eigen::VectorXcd col = tm0.entries().col(static_cast<Eigen::Index>(idx));
      col(static_cast<Eigen::Index>(idx)) -= want;
      worst = std::max(worst, col.norm() / std::max(std::abs(want), kEpsFloor));
    }
    Residual r;
    r.absolute = r.relative = worst;
    r.scalar = want;
    Json params = shape_params(c.cfg);
    params["sector"] = rep_string(sec.representative);
    c.add("scalar_boundary_" + rep_string(sec.representative),
          "cTmod(0;z) acts on the signed-orbit block by the closed-form sum",
          params, r, c.tol(1e-10));
  }
}

// ---------------------------------------------------------------------------
// operator-calculus identity suite
// ---------------------------------------------------------------------------

inline void run_appendix_identities(Ctx& c) {
  const int n = c.cfg.chain.n;
  const LegSpace amb(n, {1, 2, 3, 4});
  const LegSpace two(n, {1, 2});
  const double thr = c.tol(1e-12);
  const Json params{{"n", n}, {"legs", 4}};
  for (int t = 0; t < c.cfg.trials; ++t) {
    const TensorOperator X = random_operator(c.rng, two);
    const TensorOperator Xt = random_operator(c.rng, two);
    const TensorOperator Z = random_operator(c.rng, amb);
    const TensorOperator Zt = random_operator(c.rng, amb);
    const TensorOperator Xij = embed(X, {1, 2}, amb);
    const TensorOperator Xik = embed(Xt, {1, 3}, amb);

    c.add(indexed("transpose_product", t),
          "(X_ij Xt_ik)^t_i = Xt_ik^t_i X_ij^t_i", params,
          equation_residual(partial_transpose(Xij * Xik, 1),
                            partial_transpose(Xik, 1) * partial_transpose(Xij, 1)),
          thr);

    c.add(indexed("trace_flip", t), "Tr_j P_ij = Id", params,
          equation_residual(partial_trace(embed(flip(n), {1, 2}, two), 2),
                            TensorOperator::identity(LegSpace(n, {1}))),
          thr);

    const TensorOperator Y = random_operator(c.rng, LegSpace(n, {1}));
    const TensorOperator Yi = embed(Y, {2}, amb);
    c.add(indexed("commute_in_trace", t), "Tr_i Z Y_i = Tr_i Y_i Z", params,
          equation_residual(partial_trace(Z * Yi, 2), partial_trace(Yi * Z, 2)),
          thr);

    const TensorOperator Ljk = embed(X, {1, 3}, amb);   // legs i=1, k=3
    const TensorOperator Mjk = embed(Xt, {2, 3}, amb);  // legs j=2, k=3
    const TensorOperator lhs_pt =
        partial_trace(partial_trace(Ljk * Mjk, 1), 2);
    const LegSpace rest34(n, {3, 4});
    const TensorOperator tx =
        partial_trace(TensorOperator(LegSpace(n, {1, 3}), X.entries()), 1);
    const TensorOperator txt =
        partial_trace(TensorOperator(LegSpace(n, {2, 3}), Xt.entries()), 2);
    const TensorOperator rhs_pt = embed(tx, {3}, rest34) * embed(txt, {3}, rest34);
    c.add(indexed("product_of_traces", t),
          "Tr_ij X_ik Xt_jk = (Tr_i X_ik)(Tr_j Xt_jk)", params,
          equation_residual(lhs_pt, rhs_pt), thr);

    c.add(indexed("trace_of_transposes", t), "Tr_i Z^t_i Zt^t_i = Tr_i Z Zt",
          params,
          equation_residual(partial_trace(partial_transpose(Z, 1) *
                                              partial_transpose(Zt, 1),
                                          1),
                            partial_trace(Z * Zt, 1)),
          thr);

    c.add(indexed("trace_other_transpose", t), "Tr_i (Z^t_j) = (Tr_i Z)^t_j",
          params,
          equation_residual(partial_trace(partial_transpose(Z, 2), 1),
                            partial_transpose(partial_trace(Z, 1), 2)),
          thr);

    // Tr_i P_ij X_jk Xt_ik = (X_jk^t_j Xt_jk^t_j)^t_j with i=1, j=2, k=3
    const TensorOperator P12 = embed(flip(n), {1, 2}, amb);
    const TensorOperator Xjk = embed(X, {2, 3}, amb);
    const LegSpace rest(n, {2, 3, 4});
    const TensorOperator xjk = embed(X, {2, 3}, rest);
    const TensorOperator xtjk = embed(Xt, {2, 3}, rest);
    c.add(indexed("flip_in_trace", t),
          "Tr_i P_ij X_jk Xt_ik = (X_jk^t_j Xt_jk^t_j)^t_j", params,
          equation_residual(partial_trace(P12 * Xjk * Xik, 1),
                            partial_transpose(partial_transpose(xjk, 2) *
                                                  partial_transpose(xtjk, 2),
                                              2)),
          thr);
  }
}

inline void run_negative_control(Ctx& c) {
  const SpinChain ch = build_chain(c.cfg);
  const KMatrixDatum kp = make_K_plus(ch.R, resolved_kplus(c.cfg));
  const KMatrixDatum km = make_K_minus(ch.R, resolved_kminus(c.cfg));
  Matrix noise(ch.n(), ch.n());
  for (int i = 0; i < ch.n(); ++i)
    for (int j = 0; j < ch.n(); ++j) noise(i, j) = c.rng.box();
  noise /= noise.norm();
  const MatrixFunction kprime = *kp.Kprime;
  MatrixFunction perturbed(ch.n(), 1, [kprime, noise](Cplx x) {
    const TensorOperator t = kprime(x);
    return TensorOperator(t.space(), t.entries() + 1e-3 * t.norm() * noise);
  });
  for (int t = 0; t < std::min(c.cfg.trials, 10); ++t) {
    const Cplx x = sample_transfer_x(c, ch);
    const Cplx y = sample_transfer_x(c, ch);
    Json params = shape_params(c.cfg);
    params["x"] = pt(x);
    params["y"] = pt(y);
    params["perturbation"] = 1e-3;
    c.add(indexed("pair", t),
          "[cT(x;z), cT(y;z)] = 0 with K' perturbed (must fail)", params,
          commutator_residual(transfer_boundary(ch, perturbed, km.K, x),
                              transfer_boundary(ch, perturbed, km.K, y)),
          c.tol(1e-9));
  }
}

// ---------------------------------------------------------------------------
// registry and orchestration
// ---------------------------------------------------------------------------

using SuiteFn = void (*)(Ctx&);

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"ybe", run_ybe},
      {"twisted_ybe", run_twisted_ybe},
      {"unitarity", run_unitarity},
      {"crossing", run_crossing},
      {"reflection_lre", run_reflection_lre},
      {"reflection_rre", run_reflection_rre},
      {"reflection_dre", run_reflection_dre},
      {"refl_maps", run_refl_maps},
      {"folding", run_folding},
      {"commute_periodic", run_commute_periodic},
      {"commute_boundary", run_commute_boundary},
      {"qkz_consistency", run_qkz_consistency},
      {"bqkz_consistency", run_bqkz_consistency},
      {"interpolation", run_interpolation},
      {"sectors", run_sectors},
      {"appendix_a", run_appendix_identities},
      {"negative_control", run_negative_control},
  };
  return reg;
}

/// "all" expands to every suite except the deliberately failing control.
inline std::vector<std::string> expand_suites(const std::string& name) {
  if (name == "all") {
    std::vector<std::string> out;
    for (const auto& [n, fn] : registry())
      if (n != "negative_control") out.push_back(n);
    return out;
  }
  for (const auto& [n, fn] : registry())
    if (n == name) return {name};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline int worker_count(std::size_t tasks) {
  if (const char* env = std::getenv("REFLECTLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min<std::size_t>(static_cast<std::size_t>(v), tasks);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min<std::size_t>(hw == 0 ? 1 : hw, tasks));
}

/// Runs the named suites (concurrently up to REFLECTLAB_THREADS) and
/// assembles the sorted report. Per-suite substreams make the result
/// independent of scheduling.
inline Report run_suites(const RunConfig& cfg,
                         const std::vector<std::string>& names) {
  std::vector<std::vector<CheckRecord>> buckets(names.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(names.size());
  auto work = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= names.size()) return;
      Ctx ctx(cfg, names[k], &buckets[k]);
      for (const auto& [n, fn] : registry())
        if (n == names[k]) {
          try {
            fn(ctx);
          } catch (const std::exception& e) {
            errors[k] = e.what();
          }
          break;
        }
    }
  };
  const int workers = worker_count(names.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (std::size_t k = 0; k < names.size(); ++k)
    if (!errors[k].empty())
      throw std::runtime_error("suite '" + names[k] + "': " + errors[k]);

  Report rep;
  rep.seed = cfg.chain.seed;
  rep.config_hash = config_hash_hex(cfg);
  {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc;
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    rep.timestamp = buf;
  }
  for (auto& bucket : buckets)
    for (auto& r : bucket) rep.records.push_back(std::move(r));
  rep.sort_records();
  return rep;
}

struct RunOutcome {
  Report report;
  int exit_code = 0;
};

/// The harness entry point shared by the CLI: runs the configured suites,
/// writes the JSON report when a path is given, prints the human summary.
/// Exit code 0 when every non-degenerate check passes, 1 otherwise.
inline RunOutcome run_harness(const RunConfig& cfg,
                              const std::string& report_path,
                              std::ostream& human) {
  const std::vector<std::string> names = expand_suites(cfg.suite);
  RunOutcome out;
  out.report = run_suites(cfg, names);
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw std::runtime_error("cannot write report to " + report_path);
    f << out.report.to_json().dump(2) << "\n";
  }
  human << out.report.human_summary();
  out.exit_code = out.report.all_passed() ? 0 : 1;
  return out;
}

}  // namespace suites
}  // namespace reflectlab
