#pragma once

// Gibbs endpoint ensembles and the cycle's heats and works.
//
// Units: occupation weights are exp(-E/T); entropies are in bits; heats and
// works carry the Boltzmann constant k = log2(e), which makes the energy-sum
// form of the net work coincide exactly with its entropy/relative-entropy
// decomposition evaluated in bits.

#include <array>
#include <cmath>
#include <string>

#include "qotto/qinfo.hpp"
#include "qotto/xymodel.hpp"

namespace qotto {

inline constexpr double k_boltzmann_bits = 1.4426950408889634;  // log2(e)

struct EnginePoint {
  double gamma;
  double eta;
  double t1;  // hot bath temperature
  double j1;  // hot-stage coupling
  double t2;  // cold bath temperature
  double j2;  // cold-stage coupling

  EnginePoint(double gamma_, double eta_, double t1_, double j1_, double t2_, double j2_)
      : gamma(gamma_), eta(eta_), t1(t1_), j1(j1_), t2(t2_), j2(j2_) {
    ModelParams(gamma, j1, eta);  // validates gamma/eta/j1
    if (!(std::isfinite(t1) && std::isfinite(t2) && std::isfinite(j2)))
      throw InvalidParams("EnginePoint: parameters must be finite");
    if (t2 <= 0.0) throw InvalidParams("EnginePoint: t2 must be > 0, got " + std::to_string(t2));
    if (t1 <= t2) throw InvalidParams("EnginePoint: t1 must exceed t2, got t1 = " +
                                      std::to_string(t1) + ", t2 = " + std::to_string(t2));
    if (j2 <= 0.0) throw InvalidParams("EnginePoint: j2 must be > 0, got " + std::to_string(j2));
  }

  ModelParams hot() const { return ModelParams(gamma, j1, eta); }
  ModelParams cold() const { return ModelParams(gamma, j2, eta); }
};

// An engine configuration with the cold-stage coupling left open (the sweep
// variable).
struct EngineTemplate {
  double gamma;
  double eta;
  double t1;
  double j1;
  double t2;

  EngineTemplate(double gamma_, double eta_, double t1_, double j1_, double t2_)
      : gamma(gamma_), eta(eta_), t1(t1_), j1(j1_), t2(t2_) {
    EnginePoint(gamma, eta, t1, j1, t2, j1);  // any positive j2 validates the rest
  }

  EnginePoint at(double j2) const { return EnginePoint(gamma, eta, t1, j1, t2, j2); }
};

struct ThermalEnsemble {
  std::array<double, 4> probabilities;  // canonical level order
  double log_z;                         // ln of the partition function
  double temperature;
  XYSpectrum spectrum;

  double partition_function() const { return std::exp(log_z); }
};

// Weights are shifted by the ground energy before exponentiating; at t2 = 0.1
// with |E| up to 8 the raw weights span ~e^160.
inline ThermalEnsemble gibbs_ensemble(const ModelParams& params, double temperature) {
  if (!(temperature > 0.0))
    throw InvalidTemperature("gibbs_ensemble: temperature must be > 0, got " +
                             std::to_string(temperature));
  ThermalEnsemble ens{};
  ens.temperature = temperature;
  ens.spectrum = analytic_spectrum(params);
  const double e_min = std::min({ens.spectrum.energies[0], ens.spectrum.energies[1],
                                 ens.spectrum.energies[2], ens.spectrum.energies[3]});
  double z = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    ens.probabilities[i] = std::exp(-(ens.spectrum.energies[i] - e_min) / temperature);
    z += ens.probabilities[i];
  }
  for (auto& p : ens.probabilities) p /= z;
  ens.log_z = std::log(z) - e_min / temperature;
  return ens;
}

inline DensityMatrix<4> density_matrix(const ThermalEnsemble& ens) {
  ComplexMatrix<4> m;
  for (std::size_t i = 0; i < 4; ++i)
    m = m + complexd(ens.probabilities[i]) * outer(ens.spectrum.states[i]);
  return DensityMatrix<4>(m);
}

inline double heat_cold(const EnginePoint& pt) {
  const auto hot = gibbs_ensemble(pt.hot(), pt.t1);
  const auto cold = gibbs_ensemble(pt.cold(), pt.t2);
  double q = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    q += cold.spectrum.energies[i] * (cold.probabilities[i] - hot.probabilities[i]);
  return k_boltzmann_bits * q;
}

inline double heat_hot(const EnginePoint& pt) {
  const auto hot = gibbs_ensemble(pt.hot(), pt.t1);
  const auto cold = gibbs_ensemble(pt.cold(), pt.t2);
  double q = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    q += hot.spectrum.energies[i] * (hot.probabilities[i] - cold.probabilities[i]);
  return k_boltzmann_bits * q;
}

inline double net_work_energy(const EnginePoint& pt) {
  const auto hot = gibbs_ensemble(pt.hot(), pt.t1);
  const auto cold = gibbs_ensemble(pt.cold(), pt.t2);
  double w = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    w += (hot.spectrum.energies[i] - cold.spectrum.energies[i]) *
         (hot.probabilities[i] - cold.probabilities[i]);
  return k_boltzmann_bits * w;
}

struct WorkBreakdown {
  double w;                // net work, positive = done by the engine
  double term_entropy;     // (t1 - t2)(S1 - S2)
  double term_t1_relent;   // t1 * H[p2 || p1]
  double term_t2_relent;   // t2 * H[p1 || p2]
  double q2;               // heat taken at the cold bath (zero for subsystems)
  double q4;               // heat taken at the hot bath (zero for subsystems)
};

inline WorkBreakdown net_work_information(const EnginePoint& pt) {
  const auto hot = gibbs_ensemble(pt.hot(), pt.t1);
  const auto cold = gibbs_ensemble(pt.cold(), pt.t2);
  WorkBreakdown wb{};
  wb.term_entropy = (pt.t1 - pt.t2) * (detail::entropy_bits_unchecked(hot.probabilities) -
                                       detail::entropy_bits_unchecked(cold.probabilities));
  wb.term_t1_relent = pt.t1 * relative_entropy(cold.probabilities, hot.probabilities);
  wb.term_t2_relent = pt.t2 * relative_entropy(hot.probabilities, cold.probabilities);
  wb.w = wb.term_entropy - wb.term_t1_relent - wb.term_t2_relent;
  wb.q2 = heat_cold(pt);
  wb.q4 = heat_hot(pt);
  return wb;
}

// Work derivable from one qubit alone: the same decomposition evaluated on the
// reduced states. Under the locked field the two reduced states commute (both
// are diagonal in the computational basis); their eigenvalues are matched
// across stages in descending order after checking that commutation.
inline WorkBreakdown subsystem_work(const EnginePoint& pt, Subsystem which) {
  const auto rho1 = partial_trace(density_matrix(gibbs_ensemble(pt.hot(), pt.t1)), which);
  const auto rho2 = partial_trace(density_matrix(gibbs_ensemble(pt.cold(), pt.t2)), which);

  const auto commutator = rho1.matrix() * rho2.matrix() - rho2.matrix() * rho1.matrix();
  if (commutator.max_abs() > 1e-10)
    throw DomainError("subsystem_work: stage reductions do not commute within 1e-10");

  const auto es1 = hermitian_eigensystem(rho1.matrix());
  const auto es2 = hermitian_eigensystem(rho2.matrix());
  const std::array<double, 2> q1{clamp_small_negative(es1.values[1]),
                                 clamp_small_negative(es1.values[0])};
  const std::array<double, 2> q2{clamp_small_negative(es2.values[1]),
                                 clamp_small_negative(es2.values[0])};

  WorkBreakdown wb{};
  wb.term_entropy = (pt.t1 - pt.t2) * (detail::entropy_bits_unchecked(q1) -
                                       detail::entropy_bits_unchecked(q2));
  wb.term_t1_relent = pt.t1 * relative_entropy(q2, q1);
  wb.term_t2_relent = pt.t2 * relative_entropy(q1, q2);
  wb.w = wb.term_entropy - wb.term_t1_relent - wb.term_t2_relent;
  return wb;
}

}  // namespace qotto
