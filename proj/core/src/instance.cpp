#include "qcevo/instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "qcevo/rng.hpp"

namespace qcevo {

void Instance::validate() const {
  if (num_elements < 1) {
    throw std::invalid_argument("instance: num_elements must be >= 1");
  }
  if (partitions.empty()) {
    throw std::invalid_argument("instance: partition list is empty");
  }
  for (std::size_t p = 0; p < partitions.size(); ++p) {
    const Partition& part = partitions[p];
    if (part.weight < 0.0) {
      throw std::invalid_argument("instance: partition " + std::to_string(p) +
                                  " has negative weight");
    }
    if (part.covers.empty()) {
      throw std::invalid_argument("instance: partition " + std::to_string(p) +
                                  " covers no elements");
    }
    std::set<int> seen;
    for (int e : part.covers) {
      if (e < 0 || e >= num_elements) {
        throw std::invalid_argument("instance: partition " + std::to_string(p) +
                                    " covers out-of-range element " + std::to_string(e));
      }
      if (!seen.insert(e).second) {
        throw std::invalid_argument("instance: partition " + std::to_string(p) +
                                    " lists element " + std::to_string(e) + " twice");
      }
    }
  }
}

Instance load_instance(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("instance: parse failure: ") + e.what());
  }
  Instance instance;
  try {
    instance.num_elements = doc.at("elements").get<int>();
    for (const auto& p : doc.at("partitions")) {
      Partition part;
      part.weight = p.at("cost").get<double>();
      part.covers = p.at("covers").get<std::vector<int>>();
      std::sort(part.covers.begin(), part.covers.end());
      instance.partitions.push_back(std::move(part));
    }
    if (doc.contains("optimum")) {
      instance.known_optimum = doc.at("optimum").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("instance: malformed document: ") + e.what());
  }
  instance.validate();
  return instance;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("instance: cannot open '" + path + "'");
  }
  return load_instance(in);
}

void save_instance(const Instance& instance, std::ostream& out) {
  instance.validate();
  nlohmann::json doc;
  doc["elements"] = instance.num_elements;
  doc["partitions"] = nlohmann::json::array();
  for (const Partition& part : instance.partitions) {
    doc["partitions"].push_back({{"cost", part.weight}, {"covers", part.covers}});
  }
  if (instance.known_optimum) {
    doc["optimum"] = *instance.known_optimum;
  }
  out << doc.dump(2) << '\n';
}

void save_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("instance: cannot write '" + path + "'");
  }
  save_instance(instance, out);
}

Instance generate_instance(int num_elements, int num_partitions, std::uint64_t seed) {
  if (num_elements < 1 || num_partitions < num_elements) {
    throw std::invalid_argument(
        "generate_instance: need num_partitions >= num_elements >= 1");
  }
  RngStream rng(mix_seed({seed, stream_tag::kGenerate,
                          static_cast<std::uint64_t>(num_elements),
                          static_cast<std::uint64_t>(num_partitions)}));

  auto random_weight = [&rng] { return static_cast<double>(1 + rng.next_below(9)); };

  // Plant an exact partition: shuffle the elements and cut them into k blocks.
  std::vector<int> order(static_cast<std::size_t>(num_elements));
  std::iota(order.begin(), order.end(), 0);
  for (int i = num_elements - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
  }
  int num_blocks = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(num_elements)));
  std::vector<int> cuts;  // block b spans order[cuts[b] .. cuts[b+1])
  cuts.push_back(0);
  std::set<int> interior;
  while (static_cast<int>(interior.size()) < num_blocks - 1) {
    interior.insert(1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(num_elements - 1))));
  }
  cuts.insert(cuts.end(), interior.begin(), interior.end());
  cuts.push_back(num_elements);

  std::vector<Partition> columns;
  for (int b = 0; b < num_blocks; ++b) {
    Partition part;
    part.weight = random_weight();
    part.covers.assign(order.begin() + cuts[static_cast<std::size_t>(b)],
                       order.begin() + cuts[static_cast<std::size_t>(b) + 1]);
    std::sort(part.covers.begin(), part.covers.end());
    columns.push_back(std::move(part));
  }

  // Filler columns: random non-empty subsets, duplicates allowed.
  while (static_cast<int>(columns.size()) < num_partitions) {
    Partition part;
    part.weight = random_weight();
    for (int e = 0; e < num_elements; ++e) {
      if (rng.next_double() < 0.35) {
        part.covers.push_back(e);
      }
    }
    if (part.covers.empty()) {
      part.covers.push_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(num_elements))));
    }
    columns.push_back(std::move(part));
  }

  // Shuffle so the planted blocks are not identifiable by position.
  for (int i = num_partitions - 1; i > 0; --i) {
    std::swap(columns[static_cast<std::size_t>(i)],
              columns[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
  }

  Instance instance;
  instance.num_elements = num_elements;
  instance.partitions = std::move(columns);
  instance.validate();
  return instance;
}

}  // namespace qcevo
