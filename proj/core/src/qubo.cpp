#include "qcevo/qubo.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace qcevo {

namespace {

inline int index_bit(const QuboModel& model, std::uint64_t k, int p) {
  return static_cast<int>((k >> (model.num_vars - 1 - p)) & 1u);
}

void check_width(const QuboModel& model, const Bitstring& x) {
  if (x.size() != model.num_vars) {
    throw std::invalid_argument("qubo: bitstring length " + std::to_string(x.size()) +
                                " does not match num_vars " +
                                std::to_string(model.num_vars));
  }
}

}  // namespace

double IsingHamiltonian::energy(std::uint64_t basis_index) const {
  auto spin = [&](int p) {
    return ((basis_index >> (num_qubits - 1 - p)) & 1u) ? -1.0 : 1.0;
  };
  double e = offset;
  for (int p = 0; p < num_qubits; ++p) {
    e += h[static_cast<std::size_t>(p)] * spin(p);
  }
  for (const QuadTerm& t : couplings) {
    e += t.coeff * spin(t.p) * spin(t.q);
  }
  return e;
}

QuboModel build_qubo(const Instance& instance, const PenaltyPolicy& policy) {
  instance.validate();
  const int n = instance.num_vars();

  double total_weight = 0.0;
  for (const Partition& part : instance.partitions) {
    total_weight += part.weight;
  }
  const double rho = policy.uniform_rho.value_or(1.0 + total_weight);
  if (rho <= 0.0) {
    throw std::invalid_argument("build_qubo: penalty must be strictly positive");
  }

  QuboModel model;
  model.num_vars = n;
  model.linear.assign(static_cast<std::size_t>(n), 0.0);
  model.penalties.assign(static_cast<std::size_t>(instance.num_elements), rho);
  model.cover_index.assign(static_cast<std::size_t>(instance.num_elements), {});

  for (int p = 0; p < n; ++p) {
    model.linear[static_cast<std::size_t>(p)] = instance.partitions[static_cast<std::size_t>(p)].weight;
    for (int e : instance.partitions[static_cast<std::size_t>(p)].covers) {
      model.cover_index[static_cast<std::size_t>(e)].push_back(p);
    }
  }

  // rho_i (sum_{p covers i} x_p - 1)^2 expands, with x^2 = x, to
  //   rho_i (1 - sum_p x_p + 2 sum_{p<q} x_p x_q).
  std::map<std::pair<int, int>, double> quad;
  for (int e = 0; e < instance.num_elements; ++e) {
    const double rho_e = model.penalties[static_cast<std::size_t>(e)];
    const std::vector<int>& cover = model.cover_index[static_cast<std::size_t>(e)];
    model.constant += rho_e;
    for (std::size_t a = 0; a < cover.size(); ++a) {
      model.linear[static_cast<std::size_t>(cover[a])] -= rho_e;
      for (std::size_t b = a + 1; b < cover.size(); ++b) {
        quad[{cover[a], cover[b]}] += 2.0 * rho_e;
      }
    }
  }
  for (const auto& [pq, coeff] : quad) {
    model.quadratic.push_back({pq.first, pq.second, coeff});
  }
  return model;
}

double qubo_cost(const QuboModel& model, std::uint64_t basis_index) {
  double cost = model.constant;
  for (int p = 0; p < model.num_vars; ++p) {
    if (index_bit(model, basis_index, p)) {
      cost += model.linear[static_cast<std::size_t>(p)];
    }
  }
  for (const QuadTerm& t : model.quadratic) {
    if (index_bit(model, basis_index, t.p) && index_bit(model, basis_index, t.q)) {
      cost += t.coeff;
    }
  }
  return cost;
}

double qubo_cost(const QuboModel& model, const Bitstring& x) {
  check_width(model, x);
  return qubo_cost(model, x.to_index());
}

bool is_feasible(const QuboModel& model, std::uint64_t basis_index) {
  for (const std::vector<int>& cover : model.cover_index) {
    int hits = 0;
    for (int p : cover) {
      hits += index_bit(model, basis_index, p);
      if (hits > 1) {
        return false;
      }
    }
    if (hits != 1) {
      return false;
    }
  }
  return true;
}

bool is_feasible(const QuboModel& model, const Bitstring& x) {
  check_width(model, x);
  return is_feasible(model, x.to_index());
}

IsingHamiltonian to_ising(const QuboModel& model) {
  IsingHamiltonian ham;
  ham.num_qubits = model.num_vars;
  ham.h.assign(static_cast<std::size_t>(model.num_vars), 0.0);
  ham.offset = model.constant;

  // x_p = (1 - z_p) / 2.
  for (int p = 0; p < model.num_vars; ++p) {
    const double a = model.linear[static_cast<std::size_t>(p)];
    ham.offset += a / 2.0;
    ham.h[static_cast<std::size_t>(p)] -= a / 2.0;
  }
  std::map<std::pair<int, int>, double> coup;
  for (const QuadTerm& t : model.quadratic) {
    ham.offset += t.coeff / 4.0;
    ham.h[static_cast<std::size_t>(t.p)] -= t.coeff / 4.0;
    ham.h[static_cast<std::size_t>(t.q)] -= t.coeff / 4.0;
    coup[{t.p, t.q}] += t.coeff / 4.0;
  }
  for (const auto& [pq, c] : coup) {
    if (c != 0.0) {
      ham.couplings.push_back({pq.first, pq.second, c});
    }
  }
  return ham;
}

BruteForceResult brute_force(const QuboModel& model) {
  const int n = model.num_vars;
  if (n < 1 || n > 26) {
    throw std::invalid_argument("brute_force: num_vars must be in [1, 26]");
  }

  // Per-variable adjacency for O(degree) cost deltas along the Gray walk.
  std::vector<std::vector<std::pair<int, double>>> neighbors(static_cast<std::size_t>(n));
  for (const QuadTerm& t : model.quadratic) {
    neighbors[static_cast<std::size_t>(t.p)].push_back({t.q, t.coeff});
    neighbors[static_cast<std::size_t>(t.q)].push_back({t.p, t.coeff});
  }
  std::vector<std::vector<int>> covers_of(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < model.cover_index.size(); ++e) {
    for (int p : model.cover_index[e]) {
      covers_of[static_cast<std::size_t>(p)].push_back(static_cast<int>(e));
    }
  }

  const std::uint64_t dim = 1ULL << n;
  std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0);
  std::vector<int> cover_count(model.cover_index.size(), 0);
  // Elements covered by nothing can never reach count 1.
  int violated = static_cast<int>(model.cover_index.size());
  double cost = model.constant;

  double global_min = cost;
  bool have_feasible = false;
  std::uint64_t best_index = 0;
  double best_cost = 0.0;

  auto consider = [&](std::uint64_t gray) {
    global_min = std::min(global_min, cost);
    if (violated == 0) {
      if (!have_feasible || cost < best_cost ||
          (cost == best_cost && gray < best_index)) {
        have_feasible = true;
        best_cost = cost;
        best_index = gray;
      }
    }
  };

  consider(0);
  for (std::uint64_t k = 1; k < dim; ++k) {
    const int bit = std::countr_zero(k);  // index bit flipped by this Gray step
    const int p = n - 1 - bit;
    const std::size_t sp = static_cast<std::size_t>(p);
    const double sign = x[sp] ? -1.0 : 1.0;
    x[sp] ^= 1u;

    double delta = model.linear[sp];
    for (const auto& [q, coeff] : neighbors[sp]) {
      if (x[static_cast<std::size_t>(q)]) {
        delta += coeff;
      }
    }
    cost += sign * delta;

    const int step = x[sp] ? 1 : -1;
    for (int e : covers_of[sp]) {
      int& cnt = cover_count[static_cast<std::size_t>(e)];
      if (cnt == 1) {
        ++violated;
      }
      cnt += step;
      if (cnt == 1) {
        --violated;
      }
    }
    consider(k ^ (k >> 1));
  }

  BruteForceResult result;
  result.global_min_cost = global_min;
  if (have_feasible) {
    result.best_feasible = {Bitstring::from_index(best_index, n), best_cost};
  }
  return result;
}

}  // namespace qcevo
