#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reflectlab/polynomial.hpp"
#include "reflectlab/residual.hpp"
#include "reflectlab/rng.hpp"
#include "reflectlab/tensor.hpp"

namespace reflectlab {

/// Within this distance of a listed evaluation pole, operator() switches to
/// polynomial interpolation (when a degree hint is available) instead of
/// evaluating through the near-singular point.
inline constexpr double kPoleFallbackRadius = 1e-4;

/// Minimum distance the rejection sampler keeps between spectral arguments
/// and singular points.
inline constexpr double kPoleRejectRadius = 1e-3;

/// A parameter-dependent operator: an evaluation map x -> TensorOperator on a
/// fixed number of legs, together with its singular-point bookkeeping.
///
/// eval_poles mark x where evaluation itself is undefined; inversion_poles
/// mark additional x where the evaluated operator is not invertible. The
/// optional predicate flags singularities that are only detected numerically.
class MatrixFunction {
 public:
  using EvalFn = std::function<TensorOperator(Cplx)>;
  using SingularFn = std::function<bool(Cplx)>;

  std::vector<Cplx> eval_poles;
  std::vector<Cplx> inversion_poles;
  SingularFn singular;
  std::optional<int> degree_hint;

  MatrixFunction(int local_dim, int arity, EvalFn eval)
      : local_dim_(local_dim), arity_(arity), eval_(std::move(eval)) {
    if (arity < 0) throw std::invalid_argument("MatrixFunction: negative arity");
  }

  int local_dim() const { return local_dim_; }
  int arity() const { return arity_; }

  TensorOperator eval_direct(Cplx x) const { return eval_(x); }

  /// Evaluation or inversion invalid at x (pole lists plus predicate).
  bool singular_at(Cplx x, bool for_inversion = false) const {
    if (pole_distance(x, for_inversion) < kPoleRejectRadius) return true;
    return singular && singular(x);
  }

  double pole_distance(Cplx x, bool include_inversion = false) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Cplx& p : eval_poles) d = std::min(d, std::abs(x - p));
    if (include_inversion)
      for (const Cplx& p : inversion_poles) d = std::min(d, std::abs(x - p));
    return d;
  }

  /// Evaluate, interpolating around removable singularities when the function
  /// is known to be polynomial of a given degree.
  TensorOperator operator()(Cplx x) const {
    const bool near_pole =
        pole_distance(x) < kPoleFallbackRadius || (singular && singular(x));
    if (!near_pole) return eval_(x);
    if (!degree_hint)
      throw std::domain_error("MatrixFunction: evaluation at singular point");
    return eval_interpolated(x);
  }

 private:
  TensorOperator eval_interpolated(Cplx x) const {
    const int d = *degree_hint;
    const std::size_t m = static_cast<std::size_t>(d) + 1;
    // nodes on a circle, rotated until all are clear of poles
    std::vector<Cplx> nodes(m);
    double phase = 0.37;
    for (int attempt = 0; attempt < 64; ++attempt, phase += 0.11) {
      bool ok = true;
      for (std::size_t k = 0; k < m; ++k) {
        const double th =
            2.0 * std::numbers::pi * (static_cast<double>(k) + phase) / static_cast<double>(m);
        nodes[k] = Cplx(1.17 * std::cos(th), 1.17 * std::sin(th));
        if (pole_distance(nodes[k]) < 1e-2 || (singular && singular(nodes[k]))) {
          ok = false;
          break;
        }
      }
      if (ok) break;
      if (attempt == 63)
        throw std::domain_error("MatrixFunction: no pole-free interpolation nodes found");
    }
    std::vector<Matrix> values;
    values.reserve(m);
    LegSpace space = eval_(nodes[0]).space();
    for (const Cplx& t : nodes) values.push_back(eval_(t).entries());
    return {std::move(space), lagrange_eval(nodes, values, x)};
  }

  int local_dim_;
  int arity_;
  EvalFn eval_;
};

/// Draw spectral points from the sampling annulus until `reject` clears them.
/// The rejection predicate receives the candidate and should return true when
/// any argument the caller will evaluate or invert comes too close to a
/// singular point.
template <class Pred>
Cplx sample_spectral_point(SplitMix64& rng, Pred&& reject, int max_tries = 100,
                           double rlo = 0.6, double rhi = 1.8) {
  for (int t = 0; t < max_tries; ++t) {
    const Cplx x = rng.annulus(rlo, rhi);
    if (!reject(x)) return x;
  }
  throw std::runtime_error(
      "sample_spectral_point: no admissible point after " +
      std::to_string(max_tries) + " rejections");
}

/// Fit a degree-d polynomial through d+1 samples and compare its prediction
/// at `probe` with direct evaluation.
inline Residual degree_check(const MatrixFunction& f, int degree, Cplx probe,
                             double node_radius = 1.1, double node_phase = 0.37) {
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  std::vector<Cplx> nodes(m);
  double phase = node_phase;
  for (int attempt = 0; attempt < 64; ++attempt, phase += 0.13) {
    bool ok = true;
    for (std::size_t k = 0; k < m; ++k) {
      const double th =
          2.0 * std::numbers::pi * (static_cast<double>(k) + phase) / static_cast<double>(m);
      nodes[k] = Cplx(node_radius * std::cos(th), node_radius * std::sin(th));
      if (f.pole_distance(nodes[k]) < 1e-2 || std::abs(nodes[k] - probe) < 1e-6) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  std::vector<Matrix> values;
  values.reserve(m);
  for (const Cplx& t : nodes) values.push_back(f(t).entries());
  const TensorOperator direct = f(probe);
  const TensorOperator predicted(direct.space(), lagrange_eval(nodes, values, probe));
  return equation_residual(predicted, direct);
}

/// Points where det f(x) vanishes, found by fitting det as a polynomial of
/// bounded degree and clustering the companion-matrix roots (multiple roots
/// scatter numerically). Each cluster center is verified to be singular.
inline std::vector<Cplx> detect_inversion_poles(const MatrixFunction& f,
                                                int det_degree_bound,
                                                double fit_radius = 1.37) {
  const std::size_t m = static_cast<std::size_t>(det_degree_bound) + 1;
  std::vector<Cplx> nodes(m), dets(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double th =
        2.0 * std::numbers::pi * (static_cast<double>(k) + 0.29) / static_cast<double>(m);
    nodes[k] = Cplx(fit_radius * std::cos(th), fit_radius * std::sin(th));
    dets[k] = f.eval_direct(nodes[k]).entries().determinant();
  }
  const auto roots = polynomial_roots(polynomial_fit(nodes, dets));
  const auto centers = cluster_points(roots, 0.05);
  std::vector<Cplx> poles;
  for (const Cplx& c : centers) {
    const Matrix v = f.eval_direct(c).entries();
    Eigen::JacobiSVD<Matrix> svd(v);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-3 * std::max(sv(0), kEpsFloor)) poles.push_back(c);
  }
  return poles;
}

}  // namespace reflectlab
