#pragma once

// Parameter sweeps over the cold-stage coupling and location of the cycle's
// critical points, plus the cross-check battery behind the verify command.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qotto/thermo.hpp"

namespace qotto {

struct SweepGrid {
  double j2_min;
  double j2_max;
  int steps;  // number of rows, endpoints included
};

struct SweepRow {
  double j2;
  double w_ab;
  double term_entropy;
  double term_t1_relent;
  double term_t2_relent;
  double q2;
  double q4;
  double w_a;
  double w_b;
  double deficit;  // w_ab - w_a - w_b
  double s1;
  double s2;
  double mutual_info_2;
  double concurrence_2;
  std::array<double, 4> p2;
};

inline SweepRow evaluate_point(const EnginePoint& pt) {
  SweepRow row{};
  row.j2 = pt.j2;

  const auto hot = gibbs_ensemble(pt.hot(), pt.t1);
  const auto cold = gibbs_ensemble(pt.cold(), pt.t2);
  const auto wb = net_work_information(pt);
  row.w_ab = wb.w;
  row.term_entropy = wb.term_entropy;
  row.term_t1_relent = wb.term_t1_relent;
  row.term_t2_relent = wb.term_t2_relent;
  row.q2 = wb.q2;
  row.q4 = wb.q4;
  row.w_a = subsystem_work(pt, Subsystem::A).w;
  row.w_b = subsystem_work(pt, Subsystem::B).w;
  row.deficit = row.w_ab - row.w_a - row.w_b;
  row.s1 = detail::entropy_bits_unchecked(hot.probabilities);
  row.s2 = detail::entropy_bits_unchecked(cold.probabilities);
  const auto rho2 = density_matrix(cold);
  row.mutual_info_2 = mutual_information(rho2);
  row.concurrence_2 = concurrence(rho2);
  row.p2 = cold.probabilities;
  return row;
}

inline std::vector<SweepRow> sweep(const EngineTemplate& tmpl, const SweepGrid& grid) {
  if (!(grid.j2_min > 0.0) || !(grid.j2_max > grid.j2_min) || grid.steps < 2)
    throw InvalidGrid("sweep: need 0 < j2_min < j2_max and steps >= 2");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.steps));
  const double h = (grid.j2_max - grid.j2_min) / (grid.steps - 1);
  for (int i = 0; i < grid.steps; ++i) {
    const double j2 = (i == grid.steps - 1) ? grid.j2_max : grid.j2_min + i * h;
    rows.push_back(evaluate_point(tmpl.at(j2)));
  }
  return rows;
}

// Positive work requires j2 above this closed-form boundary, where the two
// stage distributions coincide.
inline double find_j_min(const EngineTemplate& tmpl) { return tmpl.t2 / tmpl.t1 * tmpl.j1; }

enum class WorkObjective { total, subsystem };

struct Extremum {
  double j2;
  double value;
};

namespace detail {

inline double golden_section_max(const std::function<double(double)>& f, double a, double b,
                                 double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Coarse scan to bracket the best interior point, then golden-section
// refinement. The scan resolution is the fallback guarantee; unimodality is
// only assumed inside the located bracket.
inline Extremum scan_and_refine_max(const std::function<double(double)>& f, double lo, double hi,
                                    double tol, int coarse_points = 1024) {
  std::vector<double> xs(static_cast<std::size_t>(coarse_points));
  std::vector<double> fs(static_cast<std::size_t>(coarse_points));
  const double h = (hi - lo) / (coarse_points - 1);
  for (int i = 0; i < coarse_points; ++i) {
    xs[static_cast<std::size_t>(i)] = (i == coarse_points - 1) ? hi : lo + i * h;
    fs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i] > fs[best]) best = i;
  if (best == 0 || best + 1 == fs.size() || fs[best] <= std::max(fs.front(), fs.back()))
    throw SearchFailed("scan_and_refine_max: no interior point exceeds both endpoints");
  const double x = golden_section_max(f, xs[best - 1], xs[best + 1], tol);
  return {x, f(x)};
}

inline double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw NoBracket("bisect_root: function has the same sign at both bracket endpoints");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline Extremum maximize_work(const EngineTemplate& tmpl, WorkObjective objective) {
  const std::function<double(double)> f =
      objective == WorkObjective::total
          ? std::function<double(double)>([&tmpl](double j2) { return net_work_energy(tmpl.at(j2)); })
          : std::function<double(double)>(
                [&tmpl](double j2) { return subsystem_work(tmpl.at(j2), Subsystem::A).w; });
  const double lo = find_j_min(tmpl);
  const double tol = 1e-9 * std::max(1.0, tmpl.j1);
  return detail::scan_and_refine_max(f, lo, tmpl.j1, tol);
}

enum class RootTarget { subsystem_work_zero, concurrence_zero };

inline double find_root(const EngineTemplate& tmpl, RootTarget target, double lo, double hi) {
  const std::function<double(double)> f =
      target == RootTarget::subsystem_work_zero
          ? std::function<double(double)>(
                [&tmpl](double j2) { return subsystem_work(tmpl.at(j2), Subsystem::A).w; })
          : std::function<double(double)>([&tmpl](double j2) {
              // the signed pre-clamp value; concurrence itself is flat zero on
              // the separable side and cannot bracket
              return concurrence_signed(density_matrix(gibbs_ensemble(tmpl.at(j2).cold(), tmpl.t2)));
            });
  return detail::bisect_root(f, lo, hi, 1e-10);
}

struct CriticalReport {
  double j_min;
  double j_max;
  double w_max;
  double concurrence_at_j_max_total;
  double j_max_subsystem;
  double w_max_subsystem;
  double concurrence_at_j_max_subsystem;
  double j_crit;
  double c_crit;
  double separability_threshold;
  double i_min;  // mutual information of the hot-stage state
  double c_min;  // concurrence of the hot-stage state
};

namespace detail {

// First sign change of f on a uniform grid over [lo, hi]; NoBracket if none.
inline std::pair<double, double> first_sign_change(const std::function<double(double)>& f,
                                                   double lo, double hi, int points) {
  const double h = (hi - lo) / (points - 1);
  double x_prev = lo;
  double f_prev = f(lo);
  for (int i = 1; i < points; ++i) {
    const double x = (i == points - 1) ? hi : lo + i * h;
    const double fx = f(x);
    if ((fx < 0.0) != (f_prev < 0.0) || fx == 0.0) return {x_prev, x};
    x_prev = x;
    f_prev = fx;
  }
  throw NoBracket("first_sign_change: no sign change on the scan grid");
}

}  // namespace detail

inline CriticalReport critical_report(const EngineTemplate& tmpl) {
  CriticalReport rep{};
  rep.j_min = find_j_min(tmpl);

  const auto cold_state = [&tmpl](double j2) {
    return density_matrix(gibbs_ensemble(ModelParams(tmpl.gamma, j2, tmpl.eta), tmpl.t2));
  };

  const Extremum total = maximize_work(tmpl, WorkObjective::total);
  rep.j_max = total.j2;
  rep.w_max = total.value;
  rep.concurrence_at_j_max_total = concurrence(cold_state(total.j2));

  const Extremum sub = maximize_work(tmpl, WorkObjective::subsystem);
  rep.j_max_subsystem = sub.j2;
  rep.w_max_subsystem = sub.value;
  rep.concurrence_at_j_max_subsystem = concurrence(cold_state(sub.j2));

  const auto w_sub = [&tmpl](double j2) { return subsystem_work(tmpl.at(j2), Subsystem::A).w; };
  const auto [wlo, whi] = detail::first_sign_change(w_sub, sub.j2, tmpl.j1, 1024);
  rep.j_crit = detail::bisect_root(w_sub, wlo, whi, 1e-10);
  rep.c_crit = concurrence(cold_state(rep.j_crit));

  const auto signed_c = [&cold_state](double j2) { return concurrence_signed(cold_state(j2)); };
  const auto [clo, chi] = detail::first_sign_change(signed_c, rep.j_min, tmpl.j1, 2048);
  rep.separability_threshold = detail::bisect_root(signed_c, clo, chi, 1e-10);

  const auto rho1 = density_matrix(gibbs_ensemble(tmpl.at(tmpl.j1).hot(), tmpl.t1));
  rep.i_min = mutual_information(rho1);
  rep.c_min = concurrence(rho1);
  return rep;
}

// ---------------------------------------------------------------------------
// Cross-check battery: every oracle comparison and invariant, with measured
// deviations. Deterministic (fixed seeds), runs on the default engine set.

struct CheckResult {
  std::string name;
  double measured;
  double bound;
  bool pass;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline void add_check(VerifyReport& rep, const std::string& name, double measured, double bound) {
  rep.checks.push_back({name, measured, bound, measured <= bound});
}

inline ComplexMatrix<4> random_hermitian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix<4> a;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = complexd(u(rng), u(rng));
  ComplexMatrix<4> h;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

inline double rel_dev(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace detail

inline VerifyReport verify_suite() {
  VerifyReport rep;
  const EngineTemplate tmpl(0.4, 0.3, 1000.0, 8.0, 0.1);
  const double j_min = find_j_min(tmpl);

  // Eigensolver on random Hermitian matrices.
  {
    std::mt19937_64 rng(0x5eed0001ULL);
    double worst_recon = 0.0, worst_ortho = 0.0;
    for (int n = 0; n < 1000; ++n) {
      const auto h = detail::random_hermitian(rng);
      const auto es = hermitian_eigensystem(h);
      worst_recon = std::max(worst_recon, reconstruction_defect(h, es));
      worst_ortho = std::max(worst_ortho, orthonormality_defect(es.vectors));
    }
    detail::add_check(rep, "eigen_reconstruction_random_1000", worst_recon, 1e-10);
    detail::add_check(rep, "eigen_orthonormality_random_1000", worst_ortho, 1e-12);
  }

  // Partial trace: trace/Hermiticity preservation and the defining property.
  {
    std::mt19937_64 rng(0x5eed0002ULL);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    double worst_trace = 0.0, worst_herm = 0.0, worst_def = 0.0;
    for (int n = 0; n < 100; ++n) {
      // random mixed state from a random Hermitian via Gibbs weighting
      const auto h = detail::random_hermitian(rng);
      const auto es = hermitian_eigensystem(h);
      std::array<double, 4> w{};
      double z = 0.0;
      for (std::size_t i = 0; i < 4; ++i) z += (w[i] = std::exp(-es.values[i] / u(rng)));
      ComplexMatrix<4> mat;
      for (std::size_t i = 0; i < 4; ++i)
        mat = mat + complexd(w[i] / z) * outer(es.vectors[i]);
      const DensityMatrix<4> rho(mat);
      for (const Subsystem s : {Subsystem::A, Subsystem::B}) {
        const auto red = partial_trace(rho, s);
        worst_trace = std::max(worst_trace, std::abs(red.matrix().trace() - complexd(1.0)));
        worst_herm = std::max(worst_herm, red.matrix().hermiticity_defect());
        for (const auto& sig : {pauli::x(), pauli::y(), pauli::z()}) {
          const auto lifted = (s == Subsystem::A) ? kron(sig, pauli::id()) : kron(pauli::id(), sig);
          const double lhs = std::real((red.matrix() * sig).trace());
          const double rhs = std::real((rho.matrix() * lifted).trace());
          worst_def = std::max(worst_def, std::abs(lhs - rhs));
        }
      }
    }
    detail::add_check(rep, "partial_trace_trace_preserved", worst_trace, 1e-12);
    detail::add_check(rep, "partial_trace_hermitian", worst_herm, 1e-12);
    detail::add_check(rep, "partial_trace_defining_property", worst_def, 1e-10);
  }

  // Closed-form spectrum against the Jacobi oracle on a parameter grid.
  {
    double worst_vals = 0.0, worst_resid = 0.0, worst_trace = 0.0, worst_jinv = 0.0;
    for (int ig = 0; ig < 8; ++ig)
      for (int ie = 0; ie < 8; ++ie)
        for (int ij = 0; ij < 8; ++ij) {
          const ModelParams p(-1.0 + 2.0 * ig / 7.0, 10.0 * (ij + 1) / 8.0, 1.0 * ie / 7.0);
          const auto h = build_hamiltonian(p);
          const auto sp = analytic_spectrum(p);
          const auto es = hermitian_eigensystem(h);
          std::array<double, 4> sorted = sp.energies;
          std::sort(sorted.begin(), sorted.end());
          for (std::size_t k = 0; k < 4; ++k)
            worst_vals = std::max(worst_vals, std::abs(sorted[k] - es.values[k]));
          for (std::size_t k = 0; k < 4; ++k)
            worst_resid = std::max(worst_resid, eigen_residual(h, sp.energies[k], sp.states[k]));
          worst_trace = std::max(worst_trace, std::abs((sp.energies[0] + sp.energies[3]) +
                                                       (sp.energies[1] + sp.energies[2])));
          const auto sp2 = analytic_spectrum(ModelParams(p.gamma, 3.0 * p.j, p.eta));
          for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t i = 0; i < 4; ++i)
              worst_jinv = std::max(worst_jinv, std::abs(sp.states[k][i] - sp2.states[k][i]));
        }
    detail::add_check(rep, "analytic_vs_jacobi_eigenvalues_512", worst_vals, 1e-10);
    detail::add_check(rep, "analytic_eigen_residual_512", worst_resid, 1e-10);
    detail::add_check(rep, "hamiltonian_traceless", worst_trace, 0.0);
    detail::add_check(rep, "eigenvector_j_invariance", worst_jinv, 1e-12);
  }

  // Energy form vs information form of the net work on a 200-point grid.
  {
    double worst = 0.0, worst_first_law = 0.0, worst_wsym = 0.0, min_relent = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double j2 = j_min + (tmpl.j1 - j_min) * (i + 1) / 200.0;
      const EnginePoint pt = tmpl.at(j2);
      const double w_energy = net_work_energy(pt);
      const auto wb = net_work_information(pt);
      worst = std::max(worst, detail::rel_dev(w_energy, wb.w));
      worst_first_law = std::max(worst_first_law, detail::rel_dev(w_energy, wb.q2 + wb.q4));
      const double wa = subsystem_work(pt, Subsystem::A).w;
      const double wbv = subsystem_work(pt, Subsystem::B).w;
      worst_wsym = std::max(worst_wsym, std::abs(wa - wbv));
      min_relent = std::min({min_relent, wb.term_t1_relent, wb.term_t2_relent});
    }
    detail::add_check(rep, "eq7_eq8_max_dev", worst, 1e-9);
    detail::add_check(rep, "first_law_max_dev", worst_first_law, 1e-12);
    detail::add_check(rep, "subsystem_symmetry_max_dev", worst_wsym, 1e-12);
    detail::add_check(rep, "relent_nonnegativity", -min_relent, 0.0);
  }

  // Zero-work boundaries and sign structure.
  {
    const double w_at_min = std::abs(net_work_energy(tmpl.at(j_min)));
    const double w_at_j1 = std::abs(net_work_energy(tmpl.at(tmpl.j1)));
    const double wa_at_min = std::abs(subsystem_work(tmpl.at(j_min), Subsystem::A).w);
    detail::add_check(rep, "zero_work_at_j_min", w_at_min, 1e-12);
    detail::add_check(rep, "zero_work_at_j1", w_at_j1, 1e-12);
    detail::add_check(rep, "zero_subsystem_work_at_j_min", wa_at_min, 1e-12);
    detail::add_check(rep, "work_negative_beyond_j1", net_work_energy(tmpl.at(1.1 * tmpl.j1)), 0.0);
  }

  // Exact scale covariance: doubling all couplings and temperatures doubles
  // every heat and work and leaves the dimensionless outputs untouched.
  {
    double worst = 0.0, worst_inv = 0.0;
    const double kappa = 2.0;
    const EngineTemplate scaled(tmpl.gamma, tmpl.eta, kappa * tmpl.t1, kappa * tmpl.j1,
                                kappa * tmpl.t2);
    for (const double j2 : {0.01, 0.1, 0.575065, 2.0, 6.0}) {
      const auto row = evaluate_point(tmpl.at(j2));
      const auto srow = evaluate_point(scaled.at(kappa * j2));
      worst = std::max({worst, detail::rel_dev(srow.w_ab, kappa * row.w_ab),
                        detail::rel_dev(srow.q2, kappa * row.q2),
                        detail::rel_dev(srow.q4, kappa * row.q4),
                        detail::rel_dev(srow.w_a, kappa * row.w_a)});
      for (std::size_t i = 0; i < 4; ++i)
        worst_inv = std::max(worst_inv, std::abs(srow.p2[i] - row.p2[i]));
      worst_inv = std::max({worst_inv, std::abs(srow.s2 - row.s2),
                            std::abs(srow.mutual_info_2 - row.mutual_info_2),
                            std::abs(srow.concurrence_2 - row.concurrence_2)});
    }
    detail::add_check(rep, "kappa_scaling_max_dev", worst, 1e-12);
    detail::add_check(rep, "kappa_invariants_max_dev", worst_inv, 1e-12);
    // same cold state with rescaled bath: work flips sign once kappa*j2 > j1
    const EnginePoint flipped(tmpl.gamma, tmpl.eta, tmpl.t1, tmpl.j1, 10.0 * tmpl.t2, 10.0 * 1.0);
    detail::add_check(rep, "kappa_sign_flip", net_work_energy(flipped), 0.0);
  }

  // von Neumann entropy of a thermal state equals the Shannon entropy of its
  // occupations; quantum relative entropy collapses to the classical one on
  // the shared eigenbasis.
  {
    double worst_vn = 0.0, worst_qrel = 0.0, worst_comm = 0.0;
    for (int i = 0; i < 25; ++i) {
      const double j2 = 0.05 + (0.75 - 0.05) * i / 24.0;
      const auto hot = gibbs_ensemble(tmpl.at(j2).hot(), tmpl.t1);
      const auto cold = gibbs_ensemble(tmpl.at(j2).cold(), tmpl.t2);
      const auto rho1 = density_matrix(hot);
      const auto rho2 = density_matrix(cold);
      worst_vn = std::max(worst_vn, std::abs(von_neumann_entropy(rho2) -
                                             detail::entropy_bits_unchecked(cold.probabilities)));
      const auto comm = rho1.matrix() * rho2.matrix() - rho2.matrix() * rho1.matrix();
      worst_comm = std::max(worst_comm, comm.max_abs());
      worst_qrel = std::max(
          worst_qrel, std::abs(quantum_relative_entropy(rho2, rho1) -
                               relative_entropy(cold.probabilities, hot.probabilities)));
      worst_qrel = std::max(
          worst_qrel, std::abs(quantum_relative_entropy(rho1, rho2) -
                               relative_entropy(hot.probabilities, cold.probabilities)));
    }
    detail::add_check(rep, "vn_vs_shannon_max_dev", worst_vn, 1e-10);
    detail::add_check(rep, "thermal_states_commute", worst_comm, 1e-10);
    detail::add_check(rep, "qrel_vs_classical_max_dev", worst_qrel, 1e-9);
  }

  // Concurrence: generic algorithm against the X-state closed form, plus
  // range and threshold behaviour. The grid keeps j/t <= 5 so the smallest
  // spin-flip eigenvalue (~exp(-2 j/t)) stays above the eigensolver noise
  // floor; beyond that a 1e-10 comparison measures round-off, not algorithms.
  {
    double worst_dual = 0.0, range_violation = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double frac = i / 99.0;
      const double t = (i % 2 == 0) ? 0.1 : 1.0;
      const double j2 = (i % 2 == 0) ? 0.05 + (0.5 - 0.05) * frac : 0.2 + (5.0 - 0.2) * frac;
      const auto rho = density_matrix(gibbs_ensemble(ModelParams(0.4, j2, 0.3), t));
      const double cg = concurrence(rho);
      const double cx = concurrence_x_closed_form(rho);
      worst_dual = std::max(worst_dual, std::abs(cg - cx));
      range_violation = std::max({range_violation, -cg, cg - 1.0});
      const double mi = mutual_information(rho);
      range_violation = std::max({range_violation, -mi, mi - 2.0});
    }
    detail::add_check(rep, "concurrence_generic_vs_xform", worst_dual, 1e-10);
    detail::add_check(rep, "mi_concurrence_range", range_violation, 0.0);

    const auto cold_state = [&tmpl](double j2) {
      return density_matrix(gibbs_ensemble(ModelParams(tmpl.gamma, j2, tmpl.eta), tmpl.t2));
    };
    detail::add_check(rep, "concurrence_zero_below_threshold", concurrence(cold_state(0.09)), 0.0);
    detail::add_check(rep, "concurrence_saturates_at_j1", 0.99 - concurrence(cold_state(8.0)), 0.0);
  }

  // Monotone structure along the sweep and interior positivity.
  {
    const auto rows = sweep(tmpl, {j_min, tmpl.j1, 400});
    double min_interior = 0.0, mono_violation = 0.0;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
      min_interior = std::min(min_interior, rows[i].w_ab);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      mono_violation = std::max(mono_violation, rows[i - 1].term_entropy - rows[i].term_entropy);
      mono_violation =
          std::max(mono_violation, rows[i - 1].term_t1_relent - rows[i].term_t1_relent);
      mono_violation =
          std::max(mono_violation, rows[i - 1].term_t2_relent - rows[i].term_t2_relent);
    }
    detail::add_check(rep, "work_positive_inside_window", -min_interior, 0.0);
    detail::add_check(rep, "fig2_terms_monotone", mono_violation, 1e-12);
  }

  // Located extrema are stable against doubling the coarse scan.
  {
    const auto f = [&tmpl](double j2) { return net_work_energy(tmpl.at(j2)); };
    const double tol = 1e-9 * std::max(1.0, tmpl.j1);
    const auto e1 = detail::scan_and_refine_max(f, j_min, tmpl.j1, tol, 1024);
    const auto e2 = detail::scan_and_refine_max(f, j_min, tmpl.j1, tol, 2048);
    detail::add_check(rep, "extremum_grid_stability", std::abs(e1.j2 - e2.j2), 1e-8);
  }

  // Subsystem work turns negative past its critical coupling.
  {
    const auto w_sub = [&tmpl](double j2) { return subsystem_work(tmpl.at(j2), Subsystem::A).w; };
    const Extremum sub = maximize_work(tmpl, WorkObjective::subsystem);
    const auto [wlo, whi] = detail::first_sign_change(w_sub, sub.j2, tmpl.j1, 1024);
    const double j_crit = detail::bisect_root(w_sub, wlo, whi, 1e-10);
    detail::add_check(rep, "subsystem_work_negative_past_crit", w_sub(1.5 * j_crit), 0.0);
  }

  return rep;
}

}  // namespace qotto
