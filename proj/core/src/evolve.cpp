#include "qcevo/evolve.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qcevo {

namespace {

void merge_best_feasible(std::optional<std::pair<Bitstring, double>>& best,
                         const std::optional<std::pair<Bitstring, double>>& seen) {
  if (seen && (!best || seen->second < best->second)) {
    best = *seen;
  }
}

}  // namespace

void EvolutionConfig::validate() const {
  if (shots < 1 || offspring < 1 || max_generations < 1 || stall_window < 1) {
    throw std::invalid_argument("evolve: numeric config fields must be positive");
  }
  mutation.validate();
  if (noise) {
    noise->validate();
  }
}

std::size_t select_candidate(const std::vector<CostReport>& reports,
                             bool prefer_feasible_branch) {
  if (reports.empty()) {
    throw std::invalid_argument("select_candidate: empty pool");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (prefer_feasible_branch) {
      const bool i_feasible = reports[i].branch == CostBranch::FEASIBLE_ONLY;
      const bool best_feasible = reports[best].branch == CostBranch::FEASIBLE_ONLY;
      if (i_feasible != best_feasible) {
        if (i_feasible) {
          best = i;
        }
        continue;
      }
    }
    if (reports[i].value < reports[best].value) {
      best = i;
    }
  }
  return best;
}

EvolveResult evolve(const QuboModel& model, const EvolutionConfig& config,
                    std::uint64_t run_seed) {
  config.validate();
  const auto start_time = std::chrono::steady_clock::now();
  const int n = model.num_vars;

  IsingHamiltonian ham;
  if (config.cost_kind == CostKind::DCF_EXACT) {
    ham = to_ising(model);
  }
  const bool noisy = config.noise && !config.noise->is_zero();

  MutationConfig mutation = config.mutation;
  mutation.rng_seed = run_seed;

  EvolveResult result;
  result.final_genome = random_initial(n, run_seed);

  double best_parent_cost = std::numeric_limits<double>::infinity();
  int last_improvement = 0;
  const bool prefer_feasible =
      config.cost_kind == CostKind::ACF && !config.acf_raw_value_selection;

  for (int gen = 1; gen <= config.max_generations; ++gen) {
    std::vector<CircuitGenome> pool =
        spawn_offspring(result.final_genome, config.offspring, mutation,
                        static_cast<std::uint64_t>(gen));
    if (config.elitist) {
      pool.push_back(result.final_genome);
    }

    std::vector<CostReport> reports(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (config.cost_kind == CostKind::DCF_EXACT) {
        reports[i] = cost_dcf_exact(pool[i], ham);
      } else {
        const std::uint64_t measure_seed =
            mix_seed({run_seed, stream_tag::kMeasure,
                      static_cast<std::uint64_t>(gen), static_cast<std::uint64_t>(i)});
        const MeasurementRecord record =
            noisy ? sample_noisy(pool[i], config.shots, *config.noise, measure_seed)
                  : sample(run_circuit(pool[i]), config.shots, measure_seed);
        reports[i] = config.cost_kind == CostKind::ACF
                         ? cost_acf(record, model)
                         : cost_dcf_sampled(record, model);
      }
      merge_best_feasible(result.best_feasible, reports[i].best_feasible_seen);
    }

    const std::size_t selected = select_candidate(reports, prefer_feasible);
    result.final_genome = std::move(pool[selected]);
    result.generations_used = gen;

    GenerationLog log;
    log.generation = gen;
    log.parent_cost = reports[selected].value;
    log.branch = reports[selected].branch;
    log.parent_depth = depth(result.final_genome);
    log.parent_length = static_cast<int>(result.final_genome.gates.size());
    log.best_feasible_so_far = result.best_feasible;
    log.cumulative_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time)
            .count();
    result.logs.push_back(std::move(log));

    if (reports[selected].value < best_parent_cost) {
      best_parent_cost = reports[selected].value;
      last_improvement = gen;
    }
    if (config.target_cost && result.best_feasible &&
        result.best_feasible->second <= *config.target_cost + 1e-9) {
      break;
    }
    if (gen - last_improvement >= config.stall_window) {
      break;
    }
  }
  return result;
}

double ratio(const std::optional<std::pair<Bitstring, double>>& best_feasible,
             double oracle_optimum) {
  if (!(oracle_optimum > 0.0)) {
    throw std::invalid_argument("ratio: oracle optimum must be positive");
  }
  if (!best_feasible) {
    return 0.0;
  }
  return oracle_optimum / best_feasible->second;
}

}  // namespace qcevo
