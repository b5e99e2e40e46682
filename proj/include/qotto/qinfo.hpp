#pragma once

// Information measures, all in bits (base-2 logs). The 0 log 0 := 0 convention
// applies throughout; probabilities below 1e-300 count as zero in the sums.

#include <cmath>
#include <limits>
#include <span>

#include "qotto/matcore.hpp"

namespace qotto {

namespace detail {

constexpr double kProbFloor = 1e-300;

inline void check_distribution(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= -1e-12))
      throw InvalidDistribution("distribution entry below 0 (tolerance 1e-12)");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw InvalidDistribution("distribution does not sum to 1 within 1e-12");
}

inline double entropy_bits_unchecked(std::span<const double> p) {
  double s = 0.0;
  for (double x : p)
    if (x > kProbFloor) s -= x * std::log2(x);
  return s;
}

}  // namespace detail

inline double shannon_entropy(std::span<const double> p) {
  detail::check_distribution(p);
  return detail::entropy_bits_unchecked(p);
}

// Divergence of p from q. A support mismatch (p_i > 0 on q_i = 0) yields the
// +infinity sentinel; test with std::isinf.
inline double relative_entropy(std::span<const double> p, std::span<const double> q) {
  detail::check_distribution(p);
  detail::check_distribution(q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= detail::kProbFloor) continue;
    if (q[i] <= detail::kProbFloor) return std::numeric_limits<double>::infinity();
    s += p[i] * std::log2(p[i] / q[i]);
  }
  if (s < 0.0 && s > -1e-12) s = 0.0;  // cancellation dust at p ~= q
  return s;
}

template <std::size_t N>
double von_neumann_entropy(const DensityMatrix<N>& rho) {
  const EigenSystem<N> es = hermitian_eigensystem(rho.matrix());
  std::array<double, N> lam{};
  for (std::size_t i = 0; i < N; ++i) lam[i] = clamp_small_negative(es.values[i]);
  return detail::entropy_bits_unchecked(lam);
}

// tr rho (log2 rho - log2 sigma). Requires rho's support inside sigma's;
// returns the +infinity sentinel when sigma has no weight where rho does.
template <std::size_t N>
double quantum_relative_entropy(const DensityMatrix<N>& rho, const DensityMatrix<N>& sigma) {
  constexpr double support_tol = 1e-12;
  const EigenSystem<N> es_sigma = hermitian_eigensystem(sigma.matrix());
  for (std::size_t k = 0; k < N; ++k) {
    if (es_sigma.values[k] > support_tol) continue;
    const Vector<N> rw = rho.matrix() * es_sigma.vectors[k];
    if (std::real(inner(es_sigma.vectors[k], rw)) > support_tol)
      return std::numeric_limits<double>::infinity();
  }

  const EigenSystem<N> es_rho = hermitian_eigensystem(rho.matrix());
  double tr_rho_log_rho = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    const double r = clamp_small_negative(es_rho.values[k]);
    if (r > detail::kProbFloor) tr_rho_log_rho += r * std::log2(r);
  }

  const ComplexMatrix<N> log_sigma = spectral_map<N>(
      sigma.matrix(), [](double s) { return s > support_tol ? std::log2(s) : 0.0; }, true);
  const double tr_rho_log_sigma = std::real((rho.matrix() * log_sigma).trace());
  return tr_rho_log_rho - tr_rho_log_sigma;
}

inline double mutual_information(const DensityMatrix<4>& rho) {
  double mi = von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
              von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
  if (mi < 0.0 && mi > -1e-9) mi = 0.0;
  if (mi > 2.0 && mi < 2.0 + 1e-9) mi = 2.0;
  return mi;
}

// Spin-flipped state (YY) rho* (YY), conjugation taken entrywise in the
// computational basis.
inline ComplexMatrix<4> spin_flip(const DensityMatrix<4>& rho) {
  const ComplexMatrix<4> yy = kron(pauli::y(), pauli::y());
  return yy * rho.matrix().conjugate() * yy;
}

// lambda_1 - lambda_2 - lambda_3 - lambda_4 before clamping at zero, where the
// lambdas are the descending square roots of the spectrum of
// sqrt(rho) rho~ sqrt(rho). Everything stays Hermitian, so the Jacobi solver
// covers it; the unclamped value is what root finding brackets on.
inline double concurrence_signed(const DensityMatrix<4>& rho) {
  const ComplexMatrix<4> root =
      spectral_map<4>(rho.matrix(), [](double v) { return std::sqrt(v); }, true);
  const ComplexMatrix<4> core = root * spin_flip(rho) * root;
  const EigenSystem<4> es = hermitian_eigensystem(core);
  std::array<double, 4> lam{};
  for (std::size_t i = 0; i < 4; ++i) lam[i] = std::sqrt(clamp_small_negative(es.values[i]));
  // es.values ascending, so lam[3] is the largest
  return lam[3] - lam[2] - lam[1] - lam[0];
}

inline double concurrence(const DensityMatrix<4>& rho) {
  double c = std::max(0.0, concurrence_signed(rho));
  if (c > 1.0 && c < 1.0 + 1e-9) c = 1.0;
  return c;
}

// Closed form for X-shaped states (support on the diagonal and anti-diagonal
// only), an algorithm-independent cross-check for the thermal states here.
inline double concurrence_x_closed_form(const DensityMatrix<4>& rho) {
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(m(i, j)) > 1e-12)
        throw NotXState("concurrence_x_closed_form: off-X entry above 1e-12");
    }
  const double d00 = std::real(m(0, 0)), d11 = std::real(m(1, 1));
  const double d22 = std::real(m(2, 2)), d33 = std::real(m(3, 3));
  const double inner_branch = std::abs(m(1, 2)) - std::sqrt(std::max(0.0, d00 * d33));
  const double outer_branch = std::abs(m(0, 3)) - std::sqrt(std::max(0.0, d11 * d22));
  return 2.0 * std::max({0.0, inner_branch, outer_branch});
}

}  // namespace qotto
