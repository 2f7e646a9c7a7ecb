#ifndef QCORR_NONLOCALITY_HPP
#define QCORR_NONLOCALITY_HPP

#include <array>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qcorr/eig.hpp"
#include "qcorr/logic.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/random.hpp"

namespace qcorr {

/// Quantum maximum of the CHSH expression, 2*sqrt(2).
inline constexpr double kTsirelsonBound = 2.0 * std::numbers::sqrt2_v<double>;

/// Bipartite CHSH scenario: a state on the dimA*dimB system plus two
/// observables per party. Construction rejects any observable whose spectrum
/// leaves [-1, 1] by more than spectrum_tol.
class CorrelationScenario {
public:
  CorrelationScenario(State state, std::size_t dim_a, std::size_t dim_b,
                      HermitianMatrix a1, HermitianMatrix a2,
                      HermitianMatrix b1, HermitianMatrix b2,
                      double spectrum_tol = 1e-9);

  const State& state() const { return state_; }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const HermitianMatrix& alice(int k) const;  // k in {1, 2}
  const HermitianMatrix& bob(int l) const;    // l in {1, 2}

private:
  State state_;
  std::size_t dim_a_, dim_b_;
  std::array<HermitianMatrix, 2> alice_;
  std::array<HermitianMatrix, 2> bob_;
};

/// c_kl = tr(rho (a_k x b_l)), clamped to [-1, 1] when within 1e-9 outside.
double correlation(const CorrelationScenario& s, int k, int l);

/// c11 + c12 + c21 - c22.
double chsh_value(const CorrelationScenario& s);

/// a1 x b1 + a1 x b2 + a2 x b1 - a2 x b2 on the joint space.
HermitianMatrix bell_operator(const HermitianMatrix& a1,
                              const HermitianMatrix& a2,
                              const HermitianMatrix& b1,
                              const HermitianMatrix& b2);

/// a1 b1 + b1 a1 + a1 b2 + b2 a1 + a2 b1 + b1 a2 - a2 b2 - b2 a2 with the
/// plain matrix product; all four observables live on one space.
HermitianMatrix symmetrized_chsh_operator(const HermitianMatrix& a1,
                                          const HermitianMatrix& a2,
                                          const HermitianMatrix& b1,
                                          const HermitianMatrix& b2);

/// One deterministic local assignment, each entry +1 or -1.
struct DeterministicStrategy {
  int a1, a2, b1, b2;
};

int chsh_of(const DeterministicStrategy& s);

std::array<DeterministicStrategy, 16> all_deterministic_strategies();

struct ClassicalMax {
  int value;
  DeterministicStrategy strategy;
};

/// Exhaustive integer maximum over the 16 deterministic strategies.
ClassicalMax classical_max();

struct SeesawResult {
  double value;
  std::size_t iterations;
  bool converged;
  std::vector<double> trace;  // CHSH value after each full round
  CorrelationScenario scenario;
};

/// Alternating maximization: state to the Bell operator's top eigenvector,
/// then each party's observables to the spectral sign of the partial-traced
/// coefficient operator. Every half-step is an exact maximizer, so the trace
/// is nondecreasing. Stops when a full round improves by less than tol.
SeesawResult seesaw_optimize(const HermitianMatrix& a1,
                             const HermitianMatrix& a2,
                             const HermitianMatrix& b1,
                             const HermitianMatrix& b2, double tol = 1e-10,
                             std::size_t max_iters = 500);

/// Same, with all four observables initialized as spectral signs of random
/// Hermitian draws from Stream(seed).
SeesawResult seesaw_optimize(std::size_t dim_a, std::size_t dim_b,
                             std::uint64_t seed, double tol = 1e-10,
                             std::size_t max_iters = 500);

struct ObservableQuad {
  HermitianMatrix a1, a2, b1, b2;
};

/// Singlet state with the standard optimal angles; chsh_value = 2*sqrt(2).
CorrelationScenario optimal_qubit_scenario();

/// The optimal qubit observables pushed onto the joint space, a_k x I and
/// I x b_l, all of dimension 4 and mutually commuting across parties.
ObservableQuad embedded_optimal_qubit_observables();

/// Random state on the joint space and four random observables with spectra
/// inside [-1, 1].
CorrelationScenario random_scenario(std::size_t dim_a, std::size_t dim_b,
                                    Stream& g);

struct InequalityReport {
  std::uint64_t seed;
  std::size_t samples;
  std::size_t dim;
  double max_witnessed;  // largest |eigenvalue| seen across samples
  double bound;          // 4*sqrt(2)
  bool pass;
};

/// Samples Hermitian quadruples with norm <= 1 and checks that the spectrum
/// of the symmetrized CHSH operator stays inside [-4*sqrt(2), 4*sqrt(2)]
/// up to 1e-9. Reproducible per sample regardless of thread count.
InequalityReport verify_inequality_numeric(std::size_t samples,
                                           std::size_t dim,
                                           std::uint64_t seed);

struct ScanReport {
  std::uint64_t seed;
  std::size_t samples;
  std::size_t dim_a;
  std::size_t dim_b;
  double max_value;  // largest CHSH value over the sampled scenarios
  double bound;      // 2*sqrt(2) tolerance band
  bool pass;
};

/// CHSH over random quantum scenarios; pass iff no sample exceeds
/// 2*sqrt(2) + 1e-9.
ScanReport scan_scenarios(std::size_t samples, std::size_t dim_a,
                          std::size_t dim_b, std::uint64_t seed);

}  // namespace qcorr

#endif
