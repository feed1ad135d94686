#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reflectlab/rng.hpp"

namespace reflectlab {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kEpsFloor = 1e-300;

/// Cap on dense complex entries per operator (dim x dim).
inline constexpr std::size_t kDefaultEntryCap = std::size_t{1} << 20;

/// Tensor product of identical n-dimensional legs, each carrying an integer
/// label. Flat indices are big-endian over the listed leg order: the first
/// listed leg is the most significant digit,
///   v_{b1} (x) ... (x) v_{bk}  ->  sum_i (b_i - 1) n^(k-i).
struct LegSpace {
  int local_dim = 2;
  std::vector<int> legs;

  LegSpace(int n, std::vector<int> labels,
           std::size_t entry_cap = kDefaultEntryCap)
      : local_dim(n), legs(std::move(labels)) {
    if (n < 2) throw std::invalid_argument("LegSpace: local dimension must be >= 2");
    for (std::size_t i = 0; i < legs.size(); ++i)
      for (std::size_t j = i + 1; j < legs.size(); ++j)
        if (legs[i] == legs[j])
          throw std::invalid_argument("LegSpace: duplicate leg label " +
                                      std::to_string(legs[i]));
    const std::size_t d = dim();
    if (d > entry_cap || d * d > entry_cap)
      throw std::invalid_argument("LegSpace: dimension cap exceeded (" +
                                  std::to_string(d) + "^2 entries > " +
                                  std::to_string(entry_cap) + ")");
  }

  std::size_t rank() const { return legs.size(); }

  std::size_t dim() const {
    std::size_t d = 1;
    for (std::size_t i = 0; i < legs.size(); ++i) d *= static_cast<std::size_t>(local_dim);
    return d;
  }

  bool has(int label) const {
    return std::find(legs.begin(), legs.end(), label) != legs.end();
  }

  /// 0-based position of a label in the listed order.
  std::size_t position(int label) const {
    const auto it = std::find(legs.begin(), legs.end(), label);
    if (it == legs.end())
      throw std::invalid_argument("LegSpace: unknown leg label " + std::to_string(label));
    return static_cast<std::size_t>(it - legs.begin());
  }

  /// n^(rank-1-pos): weight of the digit at a position.
  std::size_t stride(std::size_t pos) const {
    std::size_t s = 1;
    for (std::size_t i = pos + 1; i < legs.size(); ++i) s *= static_cast<std::size_t>(local_dim);
    return s;
  }

  bool operator==(const LegSpace& o) const {
    return local_dim == o.local_dim && legs == o.legs;
  }
};

/// Dense linear operator on a LegSpace.
class TensorOperator {
 public:
  TensorOperator(LegSpace space, Matrix entries)
      : space_(std::move(space)), m_(std::move(entries)) {
    const auto d = static_cast<Eigen::Index>(space_.dim());
    if (m_.rows() != d || m_.cols() != d)
      throw std::invalid_argument("TensorOperator: entry matrix is " +
                                  std::to_string(m_.rows()) + "x" +
                                  std::to_string(m_.cols()) + ", space dim is " +
                                  std::to_string(d));
    if (!m_.allFinite())
      throw std::invalid_argument("TensorOperator: non-finite entries");
  }

  static TensorOperator identity(const LegSpace& s) {
    const auto d = static_cast<Eigen::Index>(s.dim());
    return TensorOperator(s, Matrix::Identity(d, d));
  }

  static TensorOperator zero(const LegSpace& s) {
    const auto d = static_cast<Eigen::Index>(s.dim());
    return TensorOperator(s, Matrix::Zero(d, d));
  }

  const LegSpace& space() const { return space_; }
  const Matrix& entries() const { return m_; }
  std::size_t dim() const { return space_.dim(); }

  Cplx trace() const { return m_.trace(); }
  double norm() const { return m_.norm(); }

  TensorOperator transpose() const { return {space_, m_.transpose()}; }

  TensorOperator inverse() const { return {space_, m_.partialPivLu().inverse()}; }

  TensorOperator operator*(const TensorOperator& o) const {
    require_same_space(o, "compose");
    return {space_, m_ * o.m_};
  }
  TensorOperator operator+(const TensorOperator& o) const {
    require_same_space(o, "add");
    return {space_, m_ + o.m_};
  }
  TensorOperator operator-(const TensorOperator& o) const {
    require_same_space(o, "subtract");
    return {space_, m_ - o.m_};
  }
  friend TensorOperator operator*(Cplx a, const TensorOperator& x) {
    return {x.space_, a * x.m_};
  }

 private:
  void require_same_space(const TensorOperator& o, const char* what) const {
    if (!(space_ == o.space_))
      throw std::invalid_argument(std::string("TensorOperator: ") + what +
                                  " on mismatched leg spaces");
  }

  LegSpace space_;
  Matrix m_;
};

/// P(v (x) v') = v' (x) v on two legs labelled 1, 2.
inline TensorOperator flip(int n) {
  LegSpace s(n, {1, 2});
  Matrix P = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) P(b * n + a, a * n + b) = 1.0;
  return {std::move(s), std::move(P)};
}

/// Acts as `op` on the target legs (in listed order, possibly non-adjacent or
/// reversed) and as the identity elsewhere. Targets are ambient labels.
inline TensorOperator embed(const TensorOperator& op,
                            const std::vector<int>& targets,
                            const LegSpace& ambient) {
  if (targets.size() != op.space().rank())
    throw std::invalid_argument("embed: operator has " +
                                std::to_string(op.space().rank()) +
                                " legs but " + std::to_string(targets.size()) +
                                " targets given");
  if (op.space().local_dim != ambient.local_dim)
    throw std::invalid_argument("embed: local dimension mismatch");
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw std::invalid_argument("embed: duplicate target label " +
                                    std::to_string(targets[i]));

  const int n = ambient.local_dim;
  const std::size_t k = ambient.rank();
  const std::size_t m = targets.size();
  const std::size_t dim = ambient.dim();
  const std::size_t opdim = op.space().dim();

  std::vector<std::size_t> pos(m), str(m);
  for (std::size_t t = 0; t < m; ++t) {
    pos[t] = ambient.position(targets[t]);  // throws on unknown label
    str[t] = ambient.stride(pos[t]);
  }

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
  const Matrix& opm = op.entries();
  std::vector<std::size_t> dj(k), opdigits(m);
  for (std::size_t J = 0; J < dim; ++J) {
    // digits of J, most significant first
    std::size_t rem = J;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t s = ambient.stride(i);
      dj[i] = rem / s;
      rem %= s;
    }
    std::size_t opcol = 0, base = J;
    for (std::size_t t = 0; t < m; ++t) {
      opcol = opcol * static_cast<std::size_t>(n) + dj[pos[t]];
      base -= dj[pos[t]] * str[t];
    }
    for (std::size_t opr = 0; opr < opdim; ++opr) {
      const Cplx v = opm(static_cast<Eigen::Index>(opr),
                         static_cast<Eigen::Index>(opcol));
      if (v == Cplx(0.0, 0.0)) continue;
      std::size_t rr = opr, I = base;
      for (std::size_t t = m; t-- > 0;) {
        I += (rr % static_cast<std::size_t>(n)) * str[t];
        rr /= static_cast<std::size_t>(n);
      }
      out(static_cast<Eigen::Index>(I), static_cast<Eigen::Index>(J)) = v;
    }
  }
  return {ambient, std::move(out)};
}

/// Transpose the indicated leg only; involutive.
inline TensorOperator partial_transpose(const TensorOperator& op, int leg) {
  const LegSpace& s = op.space();
  const std::size_t p = s.position(leg);
  const std::size_t str = s.stride(p);
  const std::size_t n = static_cast<std::size_t>(s.local_dim);
  const std::size_t dim = s.dim();
  Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const Matrix& m = op.entries();
  for (std::size_t I = 0; I < dim; ++I) {
    const std::size_t di = (I / str) % n;
    for (std::size_t J = 0; J < dim; ++J) {
      const std::size_t dj = (J / str) % n;
      const std::size_t I2 = I - di * str + dj * str;
      const std::size_t J2 = J - dj * str + di * str;
      out(static_cast<Eigen::Index>(I2), static_cast<Eigen::Index>(J2)) =
          m(static_cast<Eigen::Index>(I), static_cast<Eigen::Index>(J));
    }
  }
  return {s, std::move(out)};
}

/// Contract the indicated leg. A 1-leg input yields a 0-leg (1x1) operator.
inline TensorOperator partial_trace(const TensorOperator& op, int leg) {
  const LegSpace& s = op.space();
  const std::size_t p = s.position(leg);
  const std::size_t str = s.stride(p);
  const std::size_t n = static_cast<std::size_t>(s.local_dim);

  std::vector<int> rest = s.legs;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
  LegSpace rs(s.local_dim, std::move(rest));

  const std::size_t rdim = rs.dim();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(rdim),
                            static_cast<Eigen::Index>(rdim));
  const Matrix& m = op.entries();
  for (std::size_t ri = 0; ri < rdim; ++ri) {
    const std::size_t ilo = ri % str, ihi = ri / str;
    for (std::size_t rj = 0; rj < rdim; ++rj) {
      const std::size_t jlo = rj % str, jhi = rj / str;
      Cplx acc = 0.0;
      for (std::size_t d = 0; d < n; ++d) {
        const std::size_t I = (ihi * n + d) * str + ilo;
        const std::size_t J = (jhi * n + d) * str + jlo;
        acc += m(static_cast<Eigen::Index>(I), static_cast<Eigen::Index>(J));
      }
      out(static_cast<Eigen::Index>(ri), static_cast<Eigen::Index>(rj)) = acc;
    }
  }
  return {std::move(rs), std::move(out)};
}

/// Entries uniform in the complex box [-1,1] x [-1,1]i.
inline TensorOperator random_operator(SplitMix64& rng, const LegSpace& s) {
  const auto d = static_cast<Eigen::Index>(s.dim());
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = rng.box();
  return {s, std::move(m)};
}

}  // namespace reflectlab
