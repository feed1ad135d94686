#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reflectlab/matrix_function.hpp"
#include "reflectlab/r_matrix.hpp"
#include "reflectlab/rng.hpp"
#include "reflectlab/tensor.hpp"

namespace reflectlab {

/// Relative-residual thresholds: tighter for identities evaluated without
/// matrix inversions, looser once inverses enter.
struct Tolerances {
  double inverse_free = 1e-12;
  double with_inverse = 1e-9;
};

inline Cplx default_q() { return 1.1 * std::polar(1.0, 0.37); }
inline Cplx default_sqrt_p() { return std::sqrt(1.3) * std::polar(1.0, 0.105); }

/// Largest chain length by local dimension (one auxiliary leg included in the
/// dense budget).
inline int max_chain_length(int n) {
  switch (n) {
    case 2: return 8;
    case 3: return 5;
    case 4: return 4;
    default: {
      int N = 0;
      std::size_t dim = static_cast<std::size_t>(n);
      while (dim * static_cast<std::size_t>(n) <= 1024) {
        dim *= static_cast<std::size_t>(n);
        ++N;
      }
      return N;
    }
  }
}

/// Inhomogeneous chain setup: local dimension, length, inhomogeneities,
/// deformation parameter, diagonal twist, shift parameter (via its square
/// root), tolerances and RNG seed.
struct ChainConfig {
  int n = 2;
  int N = 3;
  Cplx q = default_q();
  Cplx sqrt_p = default_sqrt_p();
  std::vector<Cplx> z;      // empty: sampled from the seed
  std::vector<Cplx> twist;  // diagonal of D; empty: identity
  Tolerances tol;
  std::uint64_t seed = 42;
  std::size_t entry_cap = kDefaultEntryCap;
};

namespace detail {

/// Arguments inverted while building transport matrices for the tuple z at
/// shift parameter p (covering the p-shifted tuples the flatness checks use).
inline std::vector<Cplx> transport_arguments(const std::vector<Cplx>& z, Cplx p) {
  std::vector<Cplx> out;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (i == j) continue;
      out.push_back(z[i] / z[j]);
      out.push_back(z[i] / (p * z[j]));
    }
  return out;
}

/// Spectral arguments the harness evaluates at inverted or dual points for a
/// given inhomogeneity tuple: everything here must stay clear of the singular
/// sets. Beyond the transport arguments this covers the transfer-matrix
/// inversions 1/(x z_i) at the interpolation points x = z_j^{+-1}, +-1,
/// +-r^-1, the dual-evaluation squares z_i^{+-2}, and the partial-transpose
/// inversions of the special-value multiple chain.
inline std::vector<Cplx> composite_arguments(const std::vector<Cplx>& z, Cplx r,
                                             Cplx p) {
  std::vector<Cplx> out = transport_arguments(z, p);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Cplx zi = z[i];
    for (double s : {1.0, -1.0}) {
      out.push_back(s * zi);
      out.push_back(s / zi);
      out.push_back(s * r / zi);
      out.push_back(s / (r * zi));
    }
    out.push_back(zi * zi);
    out.push_back(1.0 / (zi * zi));
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (i == j) continue;
      out.push_back(zi * z[j]);
      out.push_back(1.0 / (zi * z[j]));
    }
  }
  return out;
}

inline std::vector<Cplx> singular_set(const RMatrixDatum& d) {
  std::vector<Cplx> s = d.R.inversion_poles;
  s.insert(s.end(), d.Rtilde.eval_poles.begin(), d.Rtilde.eval_poles.end());
  return s;
}

inline bool arguments_clear(const std::vector<Cplx>& args,
                            const std::vector<Cplx>& sing, double radius) {
  for (const Cplx& a : args)
    for (const Cplx& s : sing)
      if (std::abs(a - s) < radius) return false;
  return true;
}

}  // namespace detail

namespace detail {

inline void validate_tuple_shape(const ChainConfig& cfg) {
  if (cfg.z.size() != static_cast<std::size_t>(cfg.N))
    throw std::invalid_argument("chain: expected " + std::to_string(cfg.N) +
                                " inhomogeneities, got " +
                                std::to_string(cfg.z.size()));
  for (const Cplx& zi : cfg.z)
    if (std::abs(zi) < 1e-8)
      throw std::invalid_argument("chain: inhomogeneities must be nonzero");
  for (std::size_t i = 0; i < cfg.z.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.z.size(); ++j)
      if (std::abs(cfg.z[i] - cfg.z[j]) < 1e-9)
        throw std::invalid_argument(
            "chain: inhomogeneities must be pairwise distinct (z[" +
            std::to_string(i + 1) + "] == z[" + std::to_string(j + 1) + "])");
}

}  // namespace detail

/// Validates distinctness of the inhomogeneities and clearance of every
/// composite argument from the singular sets. Throws naming the violated
/// constraint.
inline void validate_inhomogeneities(const ChainConfig& cfg,
                                     const RMatrixDatum& d) {
  detail::validate_tuple_shape(cfg);
  const Cplx p = cfg.sqrt_p * cfg.sqrt_p;
  if (!detail::arguments_clear(detail::composite_arguments(cfg.z, d.r, p),
                               detail::singular_set(d), kPoleRejectRadius))
    throw std::invalid_argument(
        "chain: a composite spectral argument (z_i^{+-1}, z_i z_j, z_i/z_j, "
        "p- or r-shifted) lies within 1e-3 of a singular point");
}

/// Lighter validation for p-shifted tuples: only the arguments the transport
/// construction inverts need to stay clear.
inline void validate_for_transport(const ChainConfig& cfg,
                                   const RMatrixDatum& d) {
  detail::validate_tuple_shape(cfg);
  const Cplx p = cfg.sqrt_p * cfg.sqrt_p;
  if (!detail::arguments_clear(detail::transport_arguments(cfg.z, p),
                               detail::singular_set(d), kPoleRejectRadius))
    throw std::invalid_argument(
        "chain: a shifted transport argument z_i/z_j or z_i/(p z_j) lies "
        "within 1e-3 of a singular point");
}

/// Draws inhomogeneities from the sampling annulus until all composite
/// arguments clear the singular sets (at most 100 rejections per site).
inline std::vector<Cplx> sample_inhomogeneities(const ChainConfig& cfg,
                                                const RMatrixDatum& d,
                                                SplitMix64& rng) {
  const std::vector<Cplx> sing = detail::singular_set(d);
  const Cplx p = cfg.sqrt_p * cfg.sqrt_p;
  std::vector<Cplx> z;
  z.reserve(static_cast<std::size_t>(cfg.N));
  for (int i = 0; i < cfg.N; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      z.push_back(rng.annulus());
      if (detail::arguments_clear(detail::composite_arguments(z, d.r, p), sing,
                                  kPoleRejectRadius)) {
        placed = true;
      } else {
        z.pop_back();
      }
    }
    if (!placed)
      throw std::runtime_error(
          "chain: could not sample admissible inhomogeneities after 100 "
          "rejections");
  }
  return z;
}

/// A validated chain: the R-matrix datum, inhomogeneities and diagonal twist,
/// with leg labels 0 (auxiliary), 1..N (chain); a second auxiliary leg is
/// labelled -1 where needed.
struct SpinChain {
  ChainConfig cfg;
  RMatrixDatum R;
  TensorOperator D;  // one leg

  int n() const { return cfg.n; }
  int N() const { return cfg.N; }
  Cplx z(int i) const { return cfg.z[static_cast<std::size_t>(i - 1)]; }

  LegSpace state_space() const {
    std::vector<int> legs;
    for (int i = 1; i <= cfg.N; ++i) legs.push_back(i);
    return LegSpace(cfg.n, std::move(legs), cfg.entry_cap);
  }

  LegSpace aux_space() const {
    std::vector<int> legs{0};
    for (int i = 1; i <= cfg.N; ++i) legs.push_back(i);
    return LegSpace(cfg.n, std::move(legs), cfg.entry_cap);
  }

  /// Copy with z_i multiplied by p, revalidated.
  SpinChain shifted(int i, Cplx p) const;
};

inline SpinChain make_chain(ChainConfig cfg) {
  if (cfg.n < 2) throw std::invalid_argument("chain: local dimension must be >= 2");
  if (cfg.N < 0) throw std::invalid_argument("chain: length must be >= 0");
  if (cfg.N > max_chain_length(cfg.n))
    throw std::invalid_argument("chain: N = " + std::to_string(cfg.N) +
                                " exceeds the dense cap for n = " +
                                std::to_string(cfg.n) + " (max " +
                                std::to_string(max_chain_length(cfg.n)) + ")");
  RMatrixDatum d = make_R(cfg.n, cfg.q);
  if (cfg.z.empty()) {
    SplitMix64 rng(cfg.seed ^ fnv1a64("inhomogeneities"));
    cfg.z = sample_inhomogeneities(cfg, d, rng);
  }
  validate_inhomogeneities(cfg, d);

  if (cfg.twist.empty()) cfg.twist.assign(static_cast<std::size_t>(cfg.n), Cplx(1.0));
  if (cfg.twist.size() != static_cast<std::size_t>(cfg.n))
    throw std::invalid_argument("chain: twist diagonal must have n entries");
  Matrix dm = Matrix::Zero(cfg.n, cfg.n);
  for (int a = 0; a < cfg.n; ++a) {
    if (std::abs(cfg.twist[static_cast<std::size_t>(a)]) < 1e-12)
      throw std::invalid_argument("chain: twist diagonal must be invertible");
    dm(a, a) = cfg.twist[static_cast<std::size_t>(a)];
  }
  TensorOperator D(LegSpace(cfg.n, {1}), std::move(dm));
  return SpinChain{std::move(cfg), std::move(d), std::move(D)};
}

inline SpinChain SpinChain::shifted(int i, Cplx p) const {
  if (i < 1 || i > cfg.N)
    throw std::invalid_argument("chain: shift index out of range");
  ChainConfig c = cfg;
  c.z[static_cast<std::size_t>(i - 1)] *= p;
  validate_for_transport(c, R);
  return SpinChain{std::move(c), R, D};
}

}  // namespace reflectlab
