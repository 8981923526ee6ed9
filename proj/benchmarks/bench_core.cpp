#include <benchmark/benchmark.h>

#include <cstdlib>

#include "commutant/eig.hpp"
#include "commutant/haar.hpp"
#include "commutant/solver.hpp"
#include "commutant/twirl.hpp"

using namespace commutant;

namespace {

CMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  RngStream rng(seed, stream_id(StreamKind::Misc, 0, 0));
  CMatrix g(n, n);
  for (auto& e : g.entries()) e = rng.next_complex_gaussian();
  CMatrix h = adjoint(g);
  h += g;
  h *= Complex(0.5, 0.0);
  return h;
}

void bm_kron(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const CMatrix a = sample_haar_unitary(n, 1);
  const CMatrix b = sample_haar_unitary(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(bm_kron)->Arg(8)->Arg(16)->Arg(32);

void bm_hermitian_eig(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const CMatrix h = random_hermitian(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(h));
  }
}
BENCHMARK(bm_hermitian_eig)->Arg(16)->Arg(64)->Arg(256);

void bm_commutant_solve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SymmetryWord word = parse_word("U,U^H", {{"U", n}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutant_basis(word));
  }
}
BENCHMARK(bm_commutant_solve)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_mc_twirl(benchmark::State& state) {
  const SymmetryWord word = parse_word("U,U^H", {{"U", 3}});
  const CMatrix w = random_hermitian(9, 4);
  const int n_samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_twirl(w, word, n_samples, 0));
  }
}
BENCHMARK(bm_mc_twirl)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  setenv("OPENBLAS_NUM_THREADS", "1", 0);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
