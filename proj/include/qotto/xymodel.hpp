#pragma once

// Two-qubit anisotropic XY chain in a transverse field locked to the coupling,
// B = eta * J, with its closed-form spectrum.

#include <array>
#include <cmath>
#include <string>

#include "qotto/matcore.hpp"

namespace qotto {

struct ModelParams {
  double gamma;  // anisotropy in [-1, 1]
  double j;      // antiferromagnetic coupling, > 0
  double eta;    // field ratio, >= 0; transverse field is eta * j

  ModelParams(double gamma_, double j_, double eta_) : gamma(gamma_), j(j_), eta(eta_) {
    if (!(std::isfinite(gamma) && std::isfinite(j) && std::isfinite(eta)))
      throw InvalidParams("ModelParams: parameters must be finite");
    if (gamma < -1.0 || gamma > 1.0)
      throw InvalidParams("ModelParams: gamma must lie in [-1, 1], got " + std::to_string(gamma));
    if (j <= 0.0) throw InvalidParams("ModelParams: coupling j must be > 0, got " + std::to_string(j));
    if (eta < 0.0) throw InvalidParams("ModelParams: eta must be >= 0, got " + std::to_string(eta));
  }

  double field() const { return eta * j; }  // B
  double effective_field() const { return std::hypot(field(), gamma * j); }  // sqrt(B^2 + g^2 j^2)
};

// The four eigenpairs in the canonical level order
//   E = (+calB, +j, -j, -calB)
// which is NOT energy-sorted (level 2 tops level 1 whenever gamma^2 + eta^2 < 1).
// Occupation vectors downstream always use this indexing.
struct XYSpectrum {
  std::array<double, 4> energies;
  std::array<Vector<4>, 4> states;
};

// H = (1+g)/2 j XX + (1-g)/2 j YY + B/2 (ZI + IZ); all entries real.
inline ComplexMatrix<4> build_hamiltonian(const ModelParams& p) {
  const complexd cxx(0.5 * (1.0 + p.gamma) * p.j);
  const complexd cyy(0.5 * (1.0 - p.gamma) * p.j);
  const complexd cz(0.5 * p.field());
  return cxx * kron(pauli::x(), pauli::x()) + cyy * kron(pauli::y(), pauli::y()) +
         cz * (kron(pauli::z(), pauli::id()) + kron(pauli::id(), pauli::z()));
}

inline XYSpectrum analytic_spectrum(const ModelParams& p) {
  const double b = p.field();
  const double gj = p.gamma * p.j;
  const double cb = p.effective_field();

  XYSpectrum sp{};
  sp.energies = {cb, p.j, -p.j, -cb};

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  sp.states[1] = {0.0, inv_sqrt2, inv_sqrt2, 0.0};
  sp.states[2] = {0.0, inv_sqrt2, -inv_sqrt2, 0.0};

  if (gj == 0.0) {
    // Decoupled |00>,|11> block; the 0/0 normalization limit, taken with
    // positive phases.
    sp.states[0] = {1.0, 0.0, 0.0, 0.0};
    sp.states[3] = {0.0, 0.0, 0.0, 1.0};
  } else {
    const double n1 = std::hypot(cb + b, gj);
    sp.states[0] = {(cb + b) / n1, 0.0, 0.0, gj / n1};
    const double n4 = std::hypot(cb - b, gj);
    sp.states[3] = {(cb - b) / n4, 0.0, 0.0, -gj / n4};
  }
  return sp;
}

}  // namespace qotto
