#pragma once

// Dense complex linear algebra for the 2x2 / 4x4 Hermitian problems of the
// engine model: cyclic Jacobi eigensolver, partial trace, spectral functions.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>

#include "qotto/errors.hpp"

namespace qotto {

using complexd = std::complex<double>;

template <std::size_t N>
using Vector = std::array<complexd, N>;

template <std::size_t N>
class ComplexMatrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr ComplexMatrix() = default;

  static ComplexMatrix identity() {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  complexd& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
  const complexd& operator()(std::size_t r, std::size_t c) const { return e_[r * N + c]; }

  ComplexMatrix adjoint() const {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
  }

  complexd trace() const {
    complexd t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : e_) m = std::max(m, std::abs(x));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : e_) s += std::norm(x);
    return std::sqrt(s);
  }

  double hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
  }
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
  }
  friend ComplexMatrix operator*(const complexd& s, const ComplexMatrix& a) {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] = s * a.e_[i];
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const complexd aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

 private:
  std::array<complexd, N * N> e_{};
};

template <std::size_t N>
Vector<N> operator*(const ComplexMatrix<N>& m, const Vector<N>& v) {
  Vector<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <std::size_t N>
complexd inner(const Vector<N>& a, const Vector<N>& b) {
  complexd s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
ComplexMatrix<N> outer(const Vector<N>& v) {
  ComplexMatrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

// Tensor product with subsystem A on the left: (a x b)(2i+k, 2j+l) = a(i,j) b(k,l).
inline ComplexMatrix<4> kron(const ComplexMatrix<2>& a, const ComplexMatrix<2>& b) {
  ComplexMatrix<4> m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

namespace pauli {

inline ComplexMatrix<2> id() { return ComplexMatrix<2>::identity(); }

inline ComplexMatrix<2> x() {
  ComplexMatrix<2> m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline ComplexMatrix<2> y() {
  ComplexMatrix<2> m;
  m(0, 1) = complexd(0.0, -1.0);
  m(1, 0) = complexd(0.0, 1.0);
  return m;
}

inline ComplexMatrix<2> z() {
  ComplexMatrix<2> m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

}  // namespace pauli

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values;      // ascending
  std::array<Vector<N>, N> vectors;  // orthonormal, paired with values
};

template <std::size_t N>
double orthonormality_defect(const std::array<Vector<N>, N>& vectors) {
  double d = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      d = std::max(d, std::abs(inner(vectors[i], vectors[j]) - complexd(target)));
    }
  return d;
}

template <std::size_t N>
double reconstruction_defect(const ComplexMatrix<N>& m, const EigenSystem<N>& es) {
  ComplexMatrix<N> acc;
  for (std::size_t i = 0; i < N; ++i) acc = acc + complexd(es.values[i]) * outer(es.vectors[i]);
  return (m - acc).max_abs();
}

template <std::size_t N>
double eigen_residual(const ComplexMatrix<N>& m, double value, const Vector<N>& v) {
  const Vector<N> mv = m * v;
  double r = 0.0;
  for (std::size_t i = 0; i < N; ++i) r = std::max(r, std::abs(mv[i] - value * v[i]));
  return r;
}

// Fix the overall phase so the first component above `tol` is real positive.
template <std::size_t N>
void normalize_phase(Vector<N>& v, double tol = 1e-12) {
  for (std::size_t i = 0; i < N; ++i) {
    const double a = std::abs(v[i]);
    if (a > tol) {
      const complexd ph = std::conj(v[i]) / a;
      for (auto& x : v) x *= ph;
      v[i] = a;  // exact, kills residual imaginary dust
      return;
    }
  }
}

// Cyclic Jacobi with complex rotations. Convergence target is relative to the
// input norm; 100 sweeps are far more than a 4x4 ever needs.
template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const ComplexMatrix<N>& m) {
  if (m.hermiticity_defect() > 1e-10)
    throw NotHermitian("hermitian_eigensystem: input exceeds Hermiticity tolerance 1e-10");

  ComplexMatrix<N> a;
  for (std::size_t i = 0; i < N; ++i) {
    a(i, i) = complexd(std::real(m(i, i)), 0.0);
    for (std::size_t j = i + 1; j < N; ++j) {
      const complexd v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix<N> vecs = ComplexMatrix<N>::identity();

  const double target = 1e-14 * std::max(1.0, m.frobenius_norm());
  const auto off_norm = [&a]() {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const complexd ph = a(p, q) / r;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < N; ++k) {
          const complexd akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(ph) * akq;
          a(k, q) = s * ph * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const complexd apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * ph * aqk;
          a(q, k) = s * std::conj(ph) * apk + c * aqk;
        }
        a(p, p) = complexd(app - t * r, 0.0);
        a(q, q) = complexd(aqq + t * r, 0.0);
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t k = 0; k < N; ++k) {
          const complexd vkp = vecs(k, p), vkq = vecs(k, q);
          vecs(k, p) = c * vkp - s * std::conj(ph) * vkq;
          vecs(k, q) = s * ph * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && off_norm() > target)
    throw NoConvergence("hermitian_eigensystem: Jacobi sweep cap reached before convergence");

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return std::real(a(i, i)) < std::real(a(j, j)); });

  EigenSystem<N> es{};
  for (std::size_t k = 0; k < N; ++k) {
    es.values[k] = std::real(a(order[k], order[k]));
    for (std::size_t i = 0; i < N; ++i) es.vectors[k][i] = vecs(i, order[k]);
    normalize_phase(es.vectors[k]);
  }
  return es;
}

template <std::size_t N>
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix<N>& m) : m_(m) {
    if (m.hermiticity_defect() > 1e-12)
      throw DomainError("DensityMatrix: Hermiticity defect exceeds 1e-12");
    if (std::abs(m.trace() - complexd(1.0)) > 1e-12)
      throw DomainError("DensityMatrix: trace differs from 1 by more than 1e-12");
  }

  const ComplexMatrix<N>& matrix() const { return m_; }

 private:
  ComplexMatrix<N> m_;
};

enum class Subsystem { A, B };

// Reduction to one qubit of a two-qubit state; A is the left tensor factor.
inline DensityMatrix<2> partial_trace(const DensityMatrix<4>& rho, Subsystem keep) {
  const auto& m = rho.matrix();
  ComplexMatrix<2> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (keep == Subsystem::A)
        out(i, j) = m(2 * i + 0, 2 * j + 0) + m(2 * i + 1, 2 * j + 1);
      else
        out(i, j) = m(0 + i, 0 + j) + m(2 + i, 2 + j);
    }
  return DensityMatrix<2>(out);
}

// Eigenvalues in [-1e-10, 0) count as zero; anything more negative is a
// genuine domain violation, not round-off.
inline double clamp_small_negative(double v) {
  if (v >= 0.0) return v;
  if (v >= -1e-10) return 0.0;
  throw DomainError("eigenvalue below -1e-10 where a non-negative spectrum is required");
}

template <std::size_t N>
ComplexMatrix<N> spectral_map(const ComplexMatrix<N>& m, const std::function<double(double)>& f,
                              bool clamp_negative = false) {
  const EigenSystem<N> es = hermitian_eigensystem(m);
  ComplexMatrix<N> acc;
  for (std::size_t k = 0; k < N; ++k) {
    const double lam = clamp_negative ? clamp_small_negative(es.values[k]) : es.values[k];
    const double y = f(lam);
    if (!std::isfinite(y)) throw DomainError("spectral_map: function undefined at an eigenvalue");
    acc = acc + complexd(y) * outer(es.vectors[k]);
  }
  // symmetrize away round-off
  ComplexMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = 0.5 * (acc(i, j) + std::conj(acc(j, i)));
  return out;
}

}  // namespace qotto
