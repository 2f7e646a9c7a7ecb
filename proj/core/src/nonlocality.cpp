#include "qcorr/nonlocality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcorr/parallel.hpp"

namespace qcorr {
namespace {

void check_spectrum(const HermitianMatrix& m, double tol, const char* name) {
  for (const double v : hermitian_eig(m).values)
    if (v > 1.0 + tol || v < -1.0 - tol)
      throw std::invalid_argument(
          std::string("CorrelationScenario: spectrum of ") + name +
          " leaves [-1, 1], eigenvalue " + std::to_string(v));
}

double clamp_correlation(double c) {
  if (c > 1.0) {
    if (c > 1.0 + 1e-9) throw std::runtime_error("correlation above 1");
    return 1.0;
  }
  if (c < -1.0) {
    if (c < -1.0 - 1e-9) throw std::runtime_error("correlation below -1");
    return -1.0;
  }
  return c;
}

State top_eigenstate(const HermitianMatrix& m) {
  const EigResult eig = hermitian_eig(m);
  std::vector<Complex> psi(m.dim());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = eig.vectors(i, 0);
  return State::pure(psi);
}

// Best norm-1 observable for one party given everything else fixed: the
// coefficient operator is the partial trace of rho against the other party's
// combination, and the maximizer of tr(aX) over ||a|| <= 1 is sign(X).
HermitianMatrix best_alice(const State& rho, const ComplexMatrix& bob_comb,
                           std::size_t dim_a, std::size_t dim_b) {
  const ComplexMatrix weighted = mat_mul(
      rho.rho().matrix(), kron(ComplexMatrix::identity(dim_a), bob_comb));
  const ComplexMatrix x = partial_trace(weighted, dim_a, dim_b, Keep::A);
  return spectral_sign(HermitianMatrix(hermitian_part(x)));
}

HermitianMatrix best_bob(const State& rho, const ComplexMatrix& alice_comb,
                         std::size_t dim_a, std::size_t dim_b) {
  const ComplexMatrix weighted = mat_mul(
      rho.rho().matrix(), kron(alice_comb, ComplexMatrix::identity(dim_b)));
  const ComplexMatrix x = partial_trace(weighted, dim_a, dim_b, Keep::B);
  return spectral_sign(HermitianMatrix(hermitian_part(x)));
}

HermitianMatrix pauli_z() {
  return HermitianMatrix(ComplexMatrix::from_rows(
      {{Complex(1, 0), Complex(0, 0)}, {Complex(0, 0), Complex(-1, 0)}}));
}

HermitianMatrix pauli_x() {
  return HermitianMatrix(ComplexMatrix::from_rows(
      {{Complex(0, 0), Complex(1, 0)}, {Complex(1, 0), Complex(0, 0)}}));
}

}  // namespace

CorrelationScenario::CorrelationScenario(State state, std::size_t dim_a,
                                         std::size_t dim_b, HermitianMatrix a1,
                                         HermitianMatrix a2, HermitianMatrix b1,
                                         HermitianMatrix b2,
                                         double spectrum_tol)
    : state_(std::move(state)),
      dim_a_(dim_a),
      dim_b_(dim_b),
      alice_{std::move(a1), std::move(a2)},
      bob_{std::move(b1), std::move(b2)} {
  if (dim_a_ == 0 || dim_b_ == 0)
    throw std::invalid_argument("CorrelationScenario: zero dimension");
  if (state_.dim() != dim_a_ * dim_b_)
    throw std::invalid_argument(
        "CorrelationScenario: state dimension is not dimA*dimB");
  if (alice_[0].dim() != dim_a_ || alice_[1].dim() != dim_a_ ||
      bob_[0].dim() != dim_b_ || bob_[1].dim() != dim_b_)
    throw std::invalid_argument(
        "CorrelationScenario: observable dimension mismatch");
  check_spectrum(alice_[0], spectrum_tol, "a1");
  check_spectrum(alice_[1], spectrum_tol, "a2");
  check_spectrum(bob_[0], spectrum_tol, "b1");
  check_spectrum(bob_[1], spectrum_tol, "b2");
}

const HermitianMatrix& CorrelationScenario::alice(int k) const {
  if (k < 1 || k > 2) throw std::out_of_range("alice: index must be 1 or 2");
  return alice_[static_cast<std::size_t>(k - 1)];
}

const HermitianMatrix& CorrelationScenario::bob(int l) const {
  if (l < 1 || l > 2) throw std::out_of_range("bob: index must be 1 or 2");
  return bob_[static_cast<std::size_t>(l - 1)];
}

double correlation(const CorrelationScenario& s, int k, int l) {
  const ComplexMatrix ab = kron(s.alice(k).matrix(), s.bob(l).matrix());
  return clamp_correlation(trace_product_real(s.state().rho().matrix(), ab));
}

double chsh_value(const CorrelationScenario& s) {
  return correlation(s, 1, 1) + correlation(s, 1, 2) + correlation(s, 2, 1) -
         correlation(s, 2, 2);
}

HermitianMatrix bell_operator(const HermitianMatrix& a1,
                              const HermitianMatrix& a2,
                              const HermitianMatrix& b1,
                              const HermitianMatrix& b2) {
  ComplexMatrix out = kron(a1.matrix(), b1.matrix());
  out += kron(a1.matrix(), b2.matrix());
  out += kron(a2.matrix(), b1.matrix());
  out -= kron(a2.matrix(), b2.matrix());
  return HermitianMatrix(std::move(out));
}

HermitianMatrix symmetrized_chsh_operator(const HermitianMatrix& a1,
                                          const HermitianMatrix& a2,
                                          const HermitianMatrix& b1,
                                          const HermitianMatrix& b2) {
  const auto anti = [](const HermitianMatrix& x, const HermitianMatrix& y) {
    return mat_mul(x.matrix(), y.matrix()) + mat_mul(y.matrix(), x.matrix());
  };
  ComplexMatrix out = anti(a1, b1);
  out += anti(a1, b2);
  out += anti(a2, b1);
  out -= anti(a2, b2);
  return HermitianMatrix(hermitian_part(out));
}

int chsh_of(const DeterministicStrategy& s) {
  return s.a1 * s.b1 + s.a1 * s.b2 + s.a2 * s.b1 - s.a2 * s.b2;
}

std::array<DeterministicStrategy, 16> all_deterministic_strategies() {
  std::array<DeterministicStrategy, 16> out{};
  std::size_t i = 0;
  for (const int a1 : {+1, -1})
    for (const int a2 : {+1, -1})
      for (const int b1 : {+1, -1})
        for (const int b2 : {+1, -1}) out[i++] = {a1, a2, b1, b2};
  return out;
}

ClassicalMax classical_max() {
  ClassicalMax best{std::numeric_limits<int>::min(), {+1, +1, +1, +1}};
  for (const DeterministicStrategy& s : all_deterministic_strategies()) {
    const int v = chsh_of(s);
    if (v > best.value) best = {v, s};
  }
  return best;
}

SeesawResult seesaw_optimize(const HermitianMatrix& a1_init,
                             const HermitianMatrix& a2_init,
                             const HermitianMatrix& b1_init,
                             const HermitianMatrix& b2_init, double tol,
                             std::size_t max_iters) {
  const std::size_t dim_a = a1_init.dim();
  const std::size_t dim_b = b1_init.dim();
  if (dim_a < 2 || dim_b < 2)
    throw std::invalid_argument("seesaw_optimize: dims must be >= 2");
  if (a2_init.dim() != dim_a || b2_init.dim() != dim_b)
    throw std::invalid_argument("seesaw_optimize: observable dim mismatch");
  if (max_iters == 0)
    throw std::invalid_argument("seesaw_optimize: max_iters must be >= 1");

  HermitianMatrix a1 = a1_init, a2 = a2_init, b1 = b1_init, b2 = b2_init;
  std::optional<State> rho;
  std::vector<double> trace;
  trace.reserve(32);
  double prev = -std::numeric_limits<double>::infinity();
  bool converged = false;

  while (trace.size() < max_iters) {
    rho = top_eigenstate(bell_operator(a1, a2, b1, b2));
    a1 = best_alice(*rho, b1.matrix() + b2.matrix(), dim_a, dim_b);
    a2 = best_alice(*rho, b1.matrix() - b2.matrix(), dim_a, dim_b);
    b1 = best_bob(*rho, a1.matrix() + a2.matrix(), dim_a, dim_b);
    b2 = best_bob(*rho, a1.matrix() - a2.matrix(), dim_a, dim_b);
    const double value = trace_product_real(
        rho->rho().matrix(), bell_operator(a1, a2, b1, b2).matrix());
    trace.push_back(value);
    if (value - prev < tol) {
      converged = true;
      prev = value;
      break;
    }
    prev = value;
  }

  CorrelationScenario scenario(std::move(*rho), dim_a, dim_b, std::move(a1),
                               std::move(a2), std::move(b1), std::move(b2));
  return SeesawResult{prev, trace.size(), converged, std::move(trace),
                      std::move(scenario)};
}

namespace {

// Sign of a centered random Hermitian draw. Centering keeps the sign away
// from +-identity, which would start the iteration at a commuting (classical)
// fixed point.
HermitianMatrix random_sign_observable(std::size_t dim, Stream& g) {
  ComplexMatrix m = random_hermitian(dim, g).matrix();
  const Complex shift = m.trace() / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) -= shift;
  return spectral_sign(HermitianMatrix(hermitian_part(m)));
}

}  // namespace

SeesawResult seesaw_optimize(std::size_t dim_a, std::size_t dim_b,
                             std::uint64_t seed, double tol,
                             std::size_t max_iters) {
  if (dim_a < 2 || dim_b < 2)
    throw std::invalid_argument("seesaw_optimize: dims must be >= 2");
  Stream g(seed);
  const HermitianMatrix a1 = random_sign_observable(dim_a, g);
  const HermitianMatrix a2 = random_sign_observable(dim_a, g);
  const HermitianMatrix b1 = random_sign_observable(dim_b, g);
  const HermitianMatrix b2 = random_sign_observable(dim_b, g);
  return seesaw_optimize(a1, a2, b1, b2, tol, max_iters);
}

CorrelationScenario optimal_qubit_scenario() {
  const double r = 1.0 / std::numbers::sqrt2_v<double>;
  const std::vector<Complex> singlet = {Complex(0, 0), Complex(r, 0),
                                        Complex(-r, 0), Complex(0, 0)};
  const HermitianMatrix sz = pauli_z();
  const HermitianMatrix sx = pauli_x();
  const HermitianMatrix b1 =
      HermitianMatrix(-r * (sz.matrix() + sx.matrix()));
  const HermitianMatrix b2 =
      HermitianMatrix(-r * (sz.matrix() - sx.matrix()));
  return CorrelationScenario(State::pure(singlet), 2, 2, sz, sx, b1, b2);
}

ObservableQuad embedded_optimal_qubit_observables() {
  const CorrelationScenario s = optimal_qubit_scenario();
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  return ObservableQuad{
      HermitianMatrix(kron(s.alice(1).matrix(), eye)),
      HermitianMatrix(kron(s.alice(2).matrix(), eye)),
      HermitianMatrix(kron(eye, s.bob(1).matrix())),
      HermitianMatrix(kron(eye, s.bob(2).matrix())),
  };
}

CorrelationScenario random_scenario(std::size_t dim_a, std::size_t dim_b,
                                    Stream& g) {
  if (dim_a < 2 || dim_b < 2)
    throw std::invalid_argument("random_scenario: dims must be >= 2");
  State rho = random_state(dim_a * dim_b, g);
  HermitianMatrix a1 = random_observable(dim_a, g);
  HermitianMatrix a2 = random_observable(dim_a, g);
  HermitianMatrix b1 = random_observable(dim_b, g);
  HermitianMatrix b2 = random_observable(dim_b, g);
  return CorrelationScenario(std::move(rho), dim_a, dim_b, std::move(a1),
                             std::move(a2), std::move(b1), std::move(b2));
}

InequalityReport verify_inequality_numeric(std::size_t samples,
                                           std::size_t dim,
                                           std::uint64_t seed) {
  if (dim < 2)
    throw std::invalid_argument("verify_inequality_numeric: dim must be >= 2");
  std::vector<double> per_sample(samples, 0.0);
  parallel_for(samples, [&](std::size_t i) {
    Stream g = Stream::for_sample(seed, i);
    const HermitianMatrix a1 = random_observable(dim, g);
    const HermitianMatrix a2 = random_observable(dim, g);
    const HermitianMatrix b1 = random_observable(dim, g);
    const HermitianMatrix b2 = random_observable(dim, g);
    const EigResult eig =
        hermitian_eig(symmetrized_chsh_operator(a1, a2, b1, b2));
    double worst = 0.0;
    for (const double v : eig.values) worst = std::max(worst, std::abs(v));
    per_sample[i] = worst;
  });
  double max_witnessed = 0.0;
  for (const double v : per_sample) max_witnessed = std::max(max_witnessed, v);
  const double bound = 2.0 * kTsirelsonBound;
  return InequalityReport{seed,          samples, dim,
                          max_witnessed, bound,   max_witnessed <= bound + 1e-9};
}

ScanReport scan_scenarios(std::size_t samples, std::size_t dim_a,
                          std::size_t dim_b, std::uint64_t seed) {
  if (dim_a < 2 || dim_b < 2)
    throw std::invalid_argument("scan_scenarios: dims must be >= 2");
  std::vector<double> per_sample(samples, 0.0);
  parallel_for(samples, [&](std::size_t i) {
    Stream g = Stream::for_sample(seed, i);
    per_sample[i] = std::abs(chsh_value(random_scenario(dim_a, dim_b, g)));
  });
  double max_value = 0.0;
  for (const double v : per_sample) max_value = std::max(max_value, v);
  return ScanReport{seed,      samples,         dim_a, dim_b, max_value,
                    kTsirelsonBound,
                    max_value <= kTsirelsonBound + 1e-9};
}

}  // namespace qcorr
