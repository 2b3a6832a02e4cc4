// Microbenchmarks for the hot paths: gate kernels, shot sampling, the noisy
// trajectory sampler, cost evaluation, and the brute-force oracle.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "qcevo/cost.hpp"
#include "qcevo/evolve.hpp"
#include "qcevo/genome.hpp"
#include "qcevo/instance.hpp"
#include "qcevo/noise.hpp"
#include "qcevo/qubo.hpp"
#include "qcevo/rng.hpp"
#include "qcevo/statevector.hpp"

namespace {

using namespace qcevo;

StateVector random_state(int num_qubits, std::uint64_t seed) {
  StateVector state = StateVector::zero_state(num_qubits);
  RngStream stream(mix_seed({seed}));
  CircuitGenome genome;
  genome.num_qubits = num_qubits;
  for (int i = 0; i < 3 * num_qubits; ++i) {
    genome.gates.push_back(random_gate(num_qubits, stream));
  }
  return run_circuit(genome);
}

QuboModel desk_model(int num_elements, int num_partitions, std::uint64_t seed) {
  return build_qubo(generate_instance(num_elements, num_partitions, seed));
}

void BM_ApplySingleQubitGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector sv = random_state(n, 1);
  const Gate gate{GateKind::RX, n / 2, -1, 0.7};
  for (auto _ : state) {
    apply_gate(sv, gate);
    benchmark::DoNotOptimize(sv.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_ApplySingleQubitGate)->Arg(10)->Arg(14)->Arg(18);

void BM_ApplyTwoQubitGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector sv = random_state(n, 2);
  const Gate gate{GateKind::RZZ, 0, n - 1, 1.3};
  for (auto _ : state) {
    apply_gate(sv, gate);
    benchmark::DoNotOptimize(sv.amplitudes.data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_ApplyTwoQubitGate)->Arg(10)->Arg(14)->Arg(18);

void BM_Sample1024(benchmark::State& state) {
  const StateVector sv = random_state(static_cast<int>(state.range(0)), 3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(sv, 1024, seed++).total_shots);
  }
}
BENCHMARK(BM_Sample1024)->Arg(10)->Arg(14);

void BM_SampleNoisy1024(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngStream stream(mix_seed({4}));
  CircuitGenome genome;
  genome.num_qubits = n;
  for (int i = 0; i < 2 * n; ++i) {
    genome.gates.push_back(random_gate(n, stream));
  }
  const NoiseModel noise{0.01, 0.02};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_noisy(genome, 1024, noise, seed++).total_shots);
  }
}
BENCHMARK(BM_SampleNoisy1024)->Arg(10)->Arg(14);

void BM_QuboCost(benchmark::State& state) {
  const QuboModel model = desk_model(7, 14, 5);
  std::uint64_t index = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qubo_cost(model, index++ & 0x3fff));
  }
}
BENCHMARK(BM_QuboCost);

void BM_CostAcf(benchmark::State& state) {
  const QuboModel model = desk_model(5, 10, 6);
  const StateVector sv = random_state(10, 7);
  const MeasurementRecord record = sample(sv, 1024, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost_acf(record, model).value);
  }
}
BENCHMARK(BM_CostAcf);

void BM_BruteForce(benchmark::State& state) {
  const QuboModel model =
      desk_model(8, static_cast<int>(state.range(0)), 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(model).global_min_cost);
  }
}
BENCHMARK(BM_BruteForce)->Arg(14)->Arg(18);

void BM_EvolveGenerations(benchmark::State& state) {
  const QuboModel model = desk_model(5, 10, 10);
  EvolutionConfig config;
  config.max_generations = 10;
  config.stall_window = 10;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(model, config, seed++).generations_used);
  }
}
BENCHMARK(BM_EvolveGenerations);

}  // namespace
