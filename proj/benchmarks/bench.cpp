#include <benchmark/benchmark.h>

#include "qcorr/eig.hpp"
#include "qcorr/free_algebra.hpp"
#include "qcorr/interference.hpp"
#include "qcorr/nonlocality.hpp"
#include "qcorr/random.hpp"

namespace {

using namespace qcorr;

void bm_hermitian_eig(benchmark::State& state) {
  Stream g(1);
  const HermitianMatrix m = random_hermitian(state.range(0), g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(m));
  }
}
BENCHMARK(bm_hermitian_eig)->Arg(4)->Arg(8)->Arg(16);

void bm_kron(benchmark::State& state) {
  Stream g(2);
  const ComplexMatrix a = random_ginibre(8, g);
  const ComplexMatrix b = random_ginibre(8, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(bm_kron);

void bm_sorkin_third_order(benchmark::State& state) {
  Stream g(3);
  const SlitConfiguration cfg = random_slit_configuration(6, 3, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sorkin_term(cfg, 3));
  }
}
BENCHMARK(bm_sorkin_third_order);

void bm_seesaw_qubit(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(seesaw_optimize(2, 2, seed++));
  }
}
BENCHMARK(bm_seesaw_qubit);

void bm_sos_exact(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_sos_identity());
  }
}
BENCHMARK(bm_sos_exact);

void bm_inequality_sample(benchmark::State& state) {
  Stream g(4);
  const HermitianMatrix a1 = random_observable(4, g);
  const HermitianMatrix a2 = random_observable(4, g);
  const HermitianMatrix b1 = random_observable(4, g);
  const HermitianMatrix b2 = random_observable(4, g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        max_eigenvalue(symmetrized_chsh_operator(a1, a2, b1, b2)));
  }
}
BENCHMARK(bm_inequality_sample);

}  // namespace
