// Acceptance gate: quantitative reproduction of the engine's reference
// results on the default parameter set (gamma 0.4, eta 0.3, t1 1000, j1 8,
// t2 0.1) plus the property-level guarantees. Prints one line per criterion
// and exits non-zero if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qotto/qotto.hpp"

using namespace qotto;

namespace {

int g_failures = 0;

void report(int number, bool pass, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", number, what.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
double reldiff(double a, double b) { return std::abs(a - b) / std::abs(b); }

EngineTemplate default_template() { return EngineTemplate(0.4, 0.3, 1000.0, 8.0, 0.1); }

ComplexMatrix<4> random_hermitian4(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix<4> a;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = complexd(u(rng), u(rng));
  ComplexMatrix<4> h;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

}  // namespace

int main() {
  const EngineTemplate tmpl = default_template();

  // 1. closed-form positive-work boundary
  {
    const double j_min = find_j_min(tmpl);
    report(1, j_min == 8e-4, "J_min = " + fmt(j_min) + " (expected exactly 8e-4)");
  }

  // 2. total-work maximum location and value, under one second
  Extremum total{};
  {
    const auto start = std::chrono::steady_clock::now();
    total = maximize_work(tmpl, WorkObjective::total);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = reldiff(total.value, 10.3695) <= 1e-3 &&
                    reldiff(total.j2, 0.575065) <= 1e-3 && secs < 1.0;
    report(2, ok,
           "W_max = " + fmt(total.value) + " at J_2 = " + fmt(total.j2) +
               " (expected ~10.3695 at ~0.575065, 1e-3 relative; " + fmt(secs) + " s)");
  }

  // 3. concurrence at the total-work maximizer
  {
    const double c =
        concurrence(density_matrix(gibbs_ensemble(ModelParams(0.4, total.j2, 0.3), 0.1)));
    report(3, std::abs(c - 0.903444) <= 1e-3,
           "concurrence at J_max = " + fmt(c) + " (expected 0.903444 +- 1e-3)");
  }

  // 4. decomposition terms at j2 = 8
  {
    const auto wb = net_work_information(tmpl.at(8.0));
    const bool ok_te = std::abs(wb.term_entropy - 1999.81) <= 1e-2;
    const bool ok_t1 = std::abs(wb.term_t1_relent - 1988.48) <= 1e-2;
    const bool ok_t2 =
        reldiff(wb.term_t2_relent, wb.term_entropy - wb.term_t1_relent) <= 1e-6;
    std::string note = "term_entropy = " + fmt(wb.term_entropy) +
                       " (expected 1999.81 +- 1e-2), term_T1_relent = " + fmt(wb.term_t1_relent) +
                       " (expected 1988.48 +- 1e-2), term_T2_relent difference check " +
                       (ok_t2 ? "ok" : "failed");
    if (!ok_te)
      note += "; note: (T1-T2)(S1-S2) cannot exceed 999.9 * 2 bits = 1999.8, so the "
              "1999.81 target is above the mathematical bound";
    report(4, ok_te && ok_t1 && ok_t2, note);
  }

  // 5. subsystem-work maximum and the concurrence there
  {
    const auto sub = maximize_work(tmpl, WorkObjective::subsystem);
    const double c =
        concurrence(density_matrix(gibbs_ensemble(ModelParams(0.4, sub.j2, 0.3), 0.1)));
    const bool ok = reldiff(sub.value, 0.231128) <= 1e-3 && reldiff(sub.j2, 0.166289) <= 1e-3 &&
                    std::abs(c - 0.316188) <= 1e-3;
    report(5, ok,
           "w_max = " + fmt(sub.value) + " at j_2 = " + fmt(sub.j2) + ", concurrence " + fmt(c) +
               " (expected ~0.231128 at ~0.166289 with concurrence 0.316188)");
  }

  // 6. subsystem-work zero crossing and the critical concurrence
  {
    const double j_crit = find_root(tmpl, RootTarget::subsystem_work_zero, 0.2, 8.0);
    const double c =
        concurrence(density_matrix(gibbs_ensemble(ModelParams(0.4, j_crit, 0.3), 0.1)));
    const bool ok = reldiff(j_crit, 1.24252) <= 1e-3 && std::abs(c - 0.9964) <= 1e-3;
    report(6, ok,
           "j_crit = " + fmt(j_crit) + " with concurrence " + fmt(c) +
               " (expected ~1.24252 with 0.9964)");
  }

  // 7. separability threshold
  {
    const double th = find_root(tmpl, RootTarget::concurrence_zero, 8e-4, 0.2);
    report(7, reldiff(th, 9.31358e-2) <= 1e-4,
           "separability threshold = " + fmt(th) + " (expected 9.31358e-2, 1e-4 relative)");
  }

  // 8. correlation endpoints: cold state at j2 = 8 and the near-uniform hot state
  {
    const auto rho2 = density_matrix(gibbs_ensemble(ModelParams(0.4, 8.0, 0.3), 0.1));
    const double mi = mutual_information(rho2);
    const double c = concurrence(rho2);
    const auto hot = gibbs_ensemble(ModelParams(0.4, 8.0, 0.3), 1000.0);
    double max_dev = 0.0;
    for (double p : hot.probabilities) max_dev = std::max(max_dev, std::abs(p - 0.25));
    const bool ok = std::abs(mi - 2.0) <= 2e-2 && c >= 0.99 && max_dev <= 3e-3;
    report(8, ok,
           "I = " + fmt(mi) + " bits, C = " + fmt(c) + ", max |p - 1/4| = " + fmt(max_dev));
  }

  // 9. energy form vs information form over a 200-point grid
  {
    double worst = 0.0;
    const double j_min = find_j_min(tmpl);
    for (int i = 0; i < 200; ++i) {
      const double j2 = j_min + (tmpl.j1 - j_min) * (i + 1) / 200.0;
      const auto pt = tmpl.at(j2);
      worst = std::max(worst, rel(net_work_energy(pt), net_work_information(pt).w));
    }
    report(9, worst <= 1e-9, "energy/information work forms max deviation = " + fmt(worst));
  }

  // 10. closed-form spectrum vs the Jacobi oracle on 500 random parameter triples
  {
    std::mt19937_64 rng(0xacce97edULL);
    std::uniform_real_distribution<double> ug(-1.0, 1.0), uj(0.01, 10.0), ue(0.0, 1.0);
    double worst_vals = 0.0, worst_resid = 0.0;
    for (int n = 0; n < 500; ++n) {
      const ModelParams p(ug(rng), uj(rng), ue(rng));
      const auto h = build_hamiltonian(p);
      const auto sp = analytic_spectrum(p);
      const auto es = hermitian_eigensystem(h);
      std::array<double, 4> sorted = sp.energies;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t k = 0; k < 4; ++k) {
        worst_vals = std::max(worst_vals, std::abs(sorted[k] - es.values[k]));
        worst_resid = std::max(worst_resid, eigen_residual(h, sp.energies[k], sp.states[k]));
      }
    }
    report(10, worst_vals <= 1e-10 && worst_resid <= 1e-10,
           "eigenvalue deviation " + fmt(worst_vals) + ", residual " + fmt(worst_resid));
  }

  // 11. generic vs closed-form concurrence on 100 thermal states (j/t <= 5,
  // keeping the smallest spin-flip eigenvalue above the eigensolver noise)
  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double frac = i / 99.0;
      const double t = (i % 2 == 0) ? 0.1 : 1.0;
      const double j2 = (i % 2 == 0) ? 0.05 + (0.5 - 0.05) * frac : 0.2 + (5.0 - 0.2) * frac;
      const auto rho = density_matrix(gibbs_ensemble(ModelParams(0.4, j2, 0.3), t));
      worst = std::max(worst, std::abs(concurrence(rho) - concurrence_x_closed_form(rho)));
    }
    report(11, worst <= 1e-10, "concurrence dual-algorithm max deviation = " + fmt(worst));
  }

  // 12. exact scale covariance of works/heats, invariance of the rest
  {
    const EngineTemplate scaled(0.4, 0.3, 2000.0, 16.0, 0.2);
    double worst_scale = 0.0, worst_inv = 0.0;
    for (const double j2 : {0.01, 0.166289, 0.575065, 2.0, 6.0}) {
      const auto a = evaluate_point(tmpl.at(j2));
      const auto b = evaluate_point(scaled.at(2.0 * j2));
      worst_scale = std::max({worst_scale, rel(b.w_ab, 2.0 * a.w_ab), rel(b.q2, 2.0 * a.q2),
                              rel(b.q4, 2.0 * a.q4), rel(b.w_a, 2.0 * a.w_a)});
      for (std::size_t i = 0; i < 4; ++i)
        worst_inv = std::max(worst_inv, std::abs(b.p2[i] - a.p2[i]));
      worst_inv = std::max({worst_inv, std::abs(b.s1 - a.s1), std::abs(b.s2 - a.s2),
                            std::abs(b.mutual_info_2 - a.mutual_info_2),
                            std::abs(b.concurrence_2 - a.concurrence_2)});
    }
    report(12, worst_scale <= 1e-12 && worst_inv <= 1e-12,
           "scaling deviation " + fmt(worst_scale) + ", invariant drift " + fmt(worst_inv));
  }

  // 13. zero-work boundaries and sign structure outside the window
  {
    const double j_min = find_j_min(tmpl);
    const double w_lo = std::abs(net_work_energy(tmpl.at(j_min)));
    const double w_hi = std::abs(net_work_energy(tmpl.at(tmpl.j1)));
    const double wa_lo = std::abs(subsystem_work(tmpl.at(j_min), Subsystem::A).w);
    const double j_crit = find_root(tmpl, RootTarget::subsystem_work_zero, 0.2, 8.0);
    const double wa_past = subsystem_work(tmpl.at(1.5 * j_crit), Subsystem::A).w;
    const double w_past = net_work_energy(tmpl.at(1.1 * tmpl.j1));
    const bool ok =
        w_lo <= 1e-12 && w_hi <= 1e-12 && wa_lo <= 1e-12 && wa_past < 0.0 && w_past < 0.0;
    report(13, ok,
           "|W(J_min)| = " + fmt(w_lo) + ", |W(J_1)| = " + fmt(w_hi) + ", |w_A(J_min)| = " +
               fmt(wa_lo) + ", w_A(1.5 j_crit) = " + fmt(wa_past) + ", W(1.1 J_1) = " +
               fmt(w_past));
  }

  // 14. quantum relative entropy equals the classical one for the locked pairs
  {
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
      const double j2 = 0.05 + (0.75 - 0.05) * i / 24.0;
      const auto hot = gibbs_ensemble(tmpl.at(j2).hot(), tmpl.t1);
      const auto cold = gibbs_ensemble(tmpl.at(j2).cold(), tmpl.t2);
      const auto rho1 = density_matrix(hot);
      const auto rho2 = density_matrix(cold);
      worst = std::max(worst, std::abs(quantum_relative_entropy(rho2, rho1) -
                                       relative_entropy(cold.probabilities, hot.probabilities)));
      worst = std::max(worst, std::abs(quantum_relative_entropy(rho1, rho2) -
                                       relative_entropy(hot.probabilities, cold.probabilities)));
    }
    report(14, worst <= 1e-9, "quantum vs classical relative entropy max deviation = " + fmt(worst));
  }

  // 15. CLI determinism: the default sweep twice, byte for byte
  {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qotto_acceptance";
    fs::create_directories(dir);
    const fs::path a = dir / "sweep_a.csv";
    const fs::path b = dir / "sweep_b.csv";
    const std::string cli = QOTTO_CLI_PATH;
    const int ra = std::system((cli + " sweep --out " + a.string()).c_str());
    const int rb = std::system((cli + " sweep --out " + b.string()).c_str());
    bool ok = WIFEXITED(ra) && WEXITSTATUS(ra) == 0 && WIFEXITED(rb) && WEXITSTATUS(rb) == 0;
    std::string note = "two default sweep invocations";
    if (ok) {
      std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
      std::stringstream sa, sb;
      sa << fa.rdbuf();
      sb << fb.rdbuf();
      ok = !sa.str().empty() && sa.str() == sb.str();
      note += ok ? " are byte-identical" : " differ";
    } else {
      note += " did not both exit cleanly";
    }
    report(15, ok, note);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
