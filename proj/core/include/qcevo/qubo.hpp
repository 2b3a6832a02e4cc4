#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcevo/bitstring.hpp"
#include "qcevo/instance.hpp"

namespace qcevo {

// Element-wise penalty weights rho_i for the squared cover constraints. The
// default (unset) policy uses the uniform value 1 + sum_p w_p, which makes
// every infeasible assignment strictly costlier than every feasible one.
struct PenaltyPolicy {
  std::optional<double> uniform_rho;
};

struct QuadTerm {
  int p = 0;
  int q = 0;  // p < q
  double coeff = 0.0;
};

// Quadratic cost over binary variables:
//   C(x) = constant + sum_p linear[p] x_p + sum_{p<q} coeff_pq x_p x_q,
// obtained by expanding the weighted selection cost plus the penalised
// squared cover constraints. penalties and cover_index retain the constraint
// structure so feasibility stays checkable without the Instance.
struct QuboModel {
  int num_vars = 0;
  std::vector<double> linear;
  std::vector<QuadTerm> quadratic;  // sorted by (p, q)
  double constant = 0.0;
  std::vector<double> penalties;               // rho_i, strictly positive
  std::vector<std::vector<int>> cover_index;   // element -> covering variables
};

// Diagonal spin Hamiltonian equivalent to a QuboModel under z_p = 1 - 2 x_p:
//   E(z) = offset + sum_p h[p] z_p + sum_{p<q} J_pq z_p z_q.
struct IsingHamiltonian {
  int num_qubits = 0;
  std::vector<double> h;
  std::vector<QuadTerm> couplings;  // J, sorted by (p, q)
  double offset = 0.0;

  // Energy of computational basis state |k> (bit 0 of the rendered string is
  // the most significant bit of k).
  double energy(std::uint64_t basis_index) const;
};

QuboModel build_qubo(const Instance& instance, const PenaltyPolicy& policy = {});

double qubo_cost(const QuboModel& model, std::uint64_t basis_index);
double qubo_cost(const QuboModel& model, const Bitstring& x);

// True iff every element is covered exactly once. O(sum_i |cover_index[i]|).
bool is_feasible(const QuboModel& model, std::uint64_t basis_index);
bool is_feasible(const QuboModel& model, const Bitstring& x);

IsingHamiltonian to_ising(const QuboModel& model);

struct BruteForceResult {
  // Minimal-cost feasible assignment; cost ties resolved toward the
  // lexicographically smallest bitstring. Empty when nothing is feasible.
  std::optional<std::pair<Bitstring, double>> best_feasible;
  // Unconstrained minimum of C over all assignments.
  double global_min_cost = 0.0;
};

// Exhaustive scan of all 2^N assignments. Guarded to N <= 26.
BruteForceResult brute_force(const QuboModel& model);

}  // namespace qcevo
