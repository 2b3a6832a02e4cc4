#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcevo {

// One selectable column: a weighted subset of the element universe.
struct Partition {
  double weight = 0.0;
  std::vector<int> covers;  // element indices, kept sorted and unique
};

// A set partitioning instance: pick columns so that every element is covered
// exactly once at minimum total weight. Column count is the variable (qubit)
// count downstream.
struct Instance {
  int num_elements = 0;
  std::vector<Partition> partitions;
  std::optional<double> known_optimum;

  int num_vars() const { return static_cast<int>(partitions.size()); }

  // Throws std::invalid_argument on any structural violation: no partitions,
  // empty cover set, element index out of range, negative weight.
  void validate() const;
};

// Document format (JSON):
//   {"elements": int,
//    "partitions": [{"cost": number, "covers": [int, ...]}, ...],
//    "optimum": number}            // optional
Instance load_instance(std::istream& in);
Instance load_instance_file(const std::string& path);
void save_instance(const Instance& instance, std::ostream& out);
void save_instance_file(const Instance& instance, const std::string& path);

// Random desk-scale instance with a hidden exact partition of the element set
// planted among the columns, so at least one feasible selection always
// exists. Filler columns and integer weights in [1, 9] are drawn from the
// seed; the result is fully determined by the three arguments.
// Requires num_partitions >= num_elements >= 1.
Instance generate_instance(int num_elements, int num_partitions, std::uint64_t seed);

}  // namespace qcevo
