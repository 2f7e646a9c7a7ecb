// Acceptance suite: one criterion per line, wall-clock budgets enforced.
#include "qcorr/boxes.hpp"
#include "qcorr/exact.hpp"
#include "qcorr/free_algebra.hpp"
#include "qcorr/interference.hpp"
#include "qcorr/logic.hpp"
#include "qcorr/nonlocality.hpp"
#include "qcorr/random.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <vector>

using namespace qcorr;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---- 1: third-order terms vanish on random configurations ----
Outcome third_order_nullity() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Stream g = Stream::for_sample(101, i);
    const std::size_t dim = 3 + g.next_below(6);
    const SlitConfiguration cfg = random_slit_configuration(dim, 3, g);
    worst = std::max(worst, std::abs(sorkin_term(cfg, 3)));
  }
  return {worst <= 1e-10, "max |I3| = " + fmt(worst) + " over 1000 configs, dims 3..8"};
}

// ---- 2: two-slit interference appears and dies with coherence ----
Outcome two_slit_interference() {
  const double coherent = sorkin_term(phase_slit_configuration(2, 3, 0.0), 2);

  ComplexMatrix diag(3, 3);
  diag(0, 0) = 0.5;
  diag(1, 1) = 0.5;
  const SlitConfiguration dephased({Event::basis(3, 0), Event::basis(3, 1)},
                                   phase_slit_configuration(2, 3, 0.0).detector(),
                                   State(HermitianMatrix(diag)));
  const double killed = sorkin_term(dephased, 2);

  const bool pass = std::abs(coherent - 0.5) <= 1e-12 && std::abs(killed) <= 1e-12;
  return {pass, "I2 = " + fmt(coherent) + " coherent, " + fmt(killed) + " dephased"};
}

// ---- 3: exhaustive classical maximum ----
Outcome classical_bound() {
  const ClassicalMax best = classical_max();
  return {best.value == 2 && chsh_of(best.strategy) == 2,
          "max over 16 deterministic strategies = " + std::to_string(best.value)};
}

// ---- 4: seesaw reaches the Tsirelson bound from random starts ----
Outcome seesaw_convergence() {
  int reached = 0;
  bool monotone = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SeesawResult r = seesaw_optimize(2, 2, seed);
    if (r.converged && r.value >= kTsirelsonBound - 1e-6) ++reached;
    for (std::size_t k = 1; k < r.trace.size(); ++k)
      if (r.trace[k] < r.trace[k - 1] - 1e-12) monotone = false;
  }
  return {reached >= 19 && monotone,
          std::to_string(reached) + "/20 seeds reached 2*sqrt(2) - 1e-6, traces " +
              (monotone ? "monotone" : "NOT monotone")};
}

// ---- 5: no random scenario beats the Tsirelson bound ----
Outcome scenario_scan() {
  double worst = 0.0;
  bool pass = true;
  const std::array<std::tuple<std::size_t, std::size_t, std::uint64_t>, 3> plan{
      std::tuple{40000u, 2u, 501u}, std::tuple{30000u, 3u, 502u},
      std::tuple{30000u, 4u, 503u}};
  for (const auto& [n, dim, seed] : plan) {
    const ScanReport r = scan_scenarios(n, dim, dim, seed);
    worst = std::max(worst, r.max_value);
    pass = pass && r.pass;
  }
  return {pass && worst <= kTsirelsonBound + 1e-9,
          "max |CHSH| = " + fmt(worst) + " over 100000 scenarios, dims 2..4"};
}

// ---- 6: operator inequality spectrum check plus saturation witness ----
Outcome operator_inequality() {
  const InequalityReport r2 = verify_inequality_numeric(10000, 2, 601);
  const InequalityReport r4 = verify_inequality_numeric(10000, 4, 602);

  const ObservableQuad q = embedded_optimal_qubit_observables();
  const double witness =
      max_eigenvalue(symmetrized_chsh_operator(q.a1, q.a2, q.b1, q.b2));
  const double target = 4.0 * std::numbers::sqrt2_v<double>;

  const bool pass = r2.pass && r4.pass && std::abs(witness - target) <= 1e-6;
  return {pass, "max witnessed " + fmt(std::max(r2.max_witnessed, r4.max_witnessed)) +
                    " <= " + fmt(r2.bound) + ", witness " + fmt(witness)};
}

// ---- 7: exact sum-of-squares identity ----
Outcome exact_identity() {
  const SosReport upper = verify_sos_identity(false);
  const SosReport lower = verify_sos_identity(true);
  const bool pass = upper.identity_holds && upper.difference.is_zero() &&
                    lower.identity_holds && lower.difference.is_zero();
  return {pass, std::string("both orientations verify with zero difference: ") +
                    (pass ? "yes" : "no")};
}

// ---- 8: the PR box is a valid no-signaling table beyond the quantum set ----
Outcome pr_box() {
  const BehaviorTable pr = BehaviorTable::pr_box();
  const double value = behavior_chsh(pr);
  const bool pass =
      value == 4.0 && classify_behavior(pr) == BehaviorClass::supra_quantum;
  return {pass, "CHSH = " + fmt(value) + ", class " + to_string(classify_behavior(pr))};
}

// ---- 9: conditional probabilities form states ----
Outcome conditional_states() {
  Stream g(901);
  std::size_t accepted = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 5000 && accepted < 1000; ++trial) {
    const State mu = random_state(4, g);
    const Event e = random_event(4, 1 + g.next_below(3), g);
    if (probability(mu, e) <= 0.01) continue;
    ++accepted;

    const State nu = conditional_state(mu, e);
    const std::array<std::size_t, 2> ranks{1, 2};
    const auto fs = random_orthogonal_events(4, ranks, g);

    const double p1 = probability(nu, fs[0]);
    const double p2 = probability(nu, fs[1]);
    const double psum = probability(nu, event_sum(fs[0], fs[1]));
    worst = std::max({worst, std::abs(p1 + p2 - psum),
                      std::abs(probability(nu, Event::identity(4)) - 1.0),
                      std::max(-p1, -p2),
                      std::abs(p1 - conditional_probability(mu, fs[0], e))});
  }
  return {accepted == 1000 && worst <= 1e-10,
          "1000 conditionals checked, worst deviation " + fmt(worst)};
}

// ---- 10: byte-identical output across thread counts ----
std::string capture(const std::string& env, const std::string& args, bool& ok) {
  const std::string cmd =
      env + " " + std::string(QCORR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    ok = false;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  ok = status != -1 && WIFEXITED(status);
  return out;
}

Outcome determinism() {
  const std::array<std::string, 4> cmds{
      "interference --order 3 --dim 5 --samples 200 --seed 41",
      "chsh --mode scan --dim 2 --samples 200 --seed 42",
      "chsh --mode seesaw --dim 2 --seed 7",
      "identity --mode numeric --dim 2 --samples 200 --seed 43",
  };
  for (const std::string& cmd : cmds) {
    bool ok1 = false, ok2 = false, ok3 = false;
    const std::string a = capture("QCORR_THREADS=1", cmd, ok1);
    const std::string b = capture("QCORR_THREADS=4", cmd, ok2);
    const std::string c = capture("QCORR_THREADS=1", cmd, ok3);
    if (!(ok1 && ok2 && ok3) || a.empty() || a != b || a != c)
      return {false, "output diverged for: " + cmd};
  }
  return {true, "4 commands byte-identical across QCORR_THREADS=1,4"};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> body;
    double budget_s;  // 0 = no explicit budget
  };
  const std::vector<Entry> entries{
      {"third-order nullity", third_order_nullity, 30.0},
      {"two-slit interference", two_slit_interference, 0.0},
      {"classical bound", classical_bound, 0.0},
      {"seesaw convergence", seesaw_convergence, 10.0},
      {"scenario scan", scenario_scan, 300.0},
      {"operator inequality", operator_inequality, 0.0},
      {"exact identity", exact_identity, 1.0},
      {"PR box", pr_box, 0.0},
      {"conditional states", conditional_states, 0.0},
      {"determinism", determinism, 0.0},
  };

  int failures = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = entries[k].body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (entries[k].budget_s > 0.0 && secs > entries[k].budget_s) {
      out.pass = false;
      out.detail += " [over budget " + fmt(entries[k].budget_s) + "s]";
    }
    std::printf("[%s] %2zu %-22s %s (%.1fs)\n", out.pass ? "PASS" : "FAIL",
                k + 1, entries[k].name, out.detail.c_str(), secs);
    if (!out.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
