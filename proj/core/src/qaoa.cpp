#include "qcevo/qaoa.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qcevo/nelder_mead.hpp"
#include "qcevo/rng.hpp"

namespace qcevo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

QaoaParams unpack_params(const std::vector<double>& x, int layers) {
  QaoaParams params;
  params.gammas.assign(x.begin(), x.begin() + layers);
  params.betas.assign(x.begin() + layers, x.end());
  return params;
}

}  // namespace

void QaoaParams::validate() const {
  if (gammas.empty() || gammas.size() != betas.size()) {
    throw std::invalid_argument("qaoa: gammas/betas must be equal-length, p >= 1");
  }
}

void QaoaConfig::validate() const {
  if (layers < 1 || shots < 1 || max_evals < 1 || restarts < 1) {
    throw std::invalid_argument("qaoa: numeric config fields must be positive");
  }
  if (noise) {
    noise->validate();
  }
}

CircuitGenome build_ansatz(const IsingHamiltonian& ham, const QaoaParams& params) {
  params.validate();
  const int n = ham.num_qubits;
  CircuitGenome circuit;
  circuit.num_qubits = n;
  for (int q = 0; q < n; ++q) {
    circuit.gates.push_back({GateKind::RY, q, -1, std::numbers::pi / 2.0});
  }
  for (std::size_t layer = 0; layer < params.gammas.size(); ++layer) {
    const double gamma = params.gammas[layer];
    const double beta = params.betas[layer];
    for (int q = 0; q < n; ++q) {
      if (ham.h[static_cast<std::size_t>(q)] != 0.0) {
        circuit.gates.push_back(
            {GateKind::RZ, q, -1, 2.0 * gamma * ham.h[static_cast<std::size_t>(q)]});
      }
    }
    for (const QuadTerm& term : ham.couplings) {
      circuit.gates.push_back({GateKind::RZZ, term.p, term.q, 2.0 * gamma * term.coeff});
    }
    for (int q = 0; q < n; ++q) {
      circuit.gates.push_back({GateKind::RX, q, -1, 2.0 * beta});
    }
  }
  return circuit;
}

CostReport qaoa_objective(const IsingHamiltonian& ham, const QuboModel& model,
                          const QaoaParams& params, const QaoaConfig& config,
                          std::uint64_t measure_seed) {
  config.validate();
  if (ham.num_qubits != model.num_vars) {
    throw std::invalid_argument("qaoa_objective: Hamiltonian/model size mismatch");
  }
  const CircuitGenome ansatz = build_ansatz(ham, params);
  const MeasurementRecord record =
      config.noise && !config.noise->is_zero()
          ? sample_noisy(ansatz, config.shots, *config.noise, measure_seed)
          : sample(run_circuit(ansatz), config.shots, measure_seed);
  return cost_dcf_sampled(record, model);
}

QaoaResult qaoa_optimize(const IsingHamiltonian& ham, const QuboModel& model,
                         const QaoaConfig& config) {
  config.validate();
  const auto start_time = std::chrono::steady_clock::now();
  const int p = config.layers;

  QaoaResult result;
  result.best_objective = std::numeric_limits<double>::infinity();

  auto objective = [&](const std::vector<double>& x) {
    const QaoaParams params = unpack_params(x, p);
    const std::uint64_t measure_seed =
        mix_seed({config.rng_seed, stream_tag::kQaoaEval,
                  static_cast<std::uint64_t>(result.evals_used)});
    const CostReport report = qaoa_objective(ham, model, params, config, measure_seed);
    if (report.best_feasible_seen &&
        (!result.best_feasible ||
         report.best_feasible_seen->second < result.best_feasible->second)) {
      result.best_feasible = report.best_feasible_seen;
    }
    if (report.value < result.best_objective) {
      result.best_objective = report.value;
      result.best_params = params;
    }
    QaoaEvalLog log;
    log.eval_index = result.evals_used;
    log.gammas = params.gammas;
    log.betas = params.betas;
    log.objective = report.value;
    log.best_feasible_so_far = result.best_feasible;
    log.cumulative_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time)
            .count();
    result.logs.push_back(std::move(log));
    ++result.evals_used;
    return report.value;
  };

  const int per_restart = std::max(1, config.max_evals / config.restarts);
  for (int restart = 0; restart < config.restarts; ++restart) {
    const int remaining = config.max_evals - result.evals_used;
    if (remaining <= 0) {
      break;
    }
    // The last restart absorbs the division remainder.
    const int budget = restart == config.restarts - 1
                           ? remaining
                           : std::min(per_restart, remaining);

    RngStream start_stream(
        mix_seed({config.rng_seed, stream_tag::kQaoaStart,
                  static_cast<std::uint64_t>(restart)}));
    std::vector<double> start(static_cast<std::size_t>(2 * p));
    for (double& coordinate : start) {
      coordinate = start_stream.next_double() * kTwoPi;
    }

    NelderMeadOptions options;
    options.max_evals = budget;
    nelder_mead(objective, start, options);
  }
  return result;
}

}  // namespace qcevo
