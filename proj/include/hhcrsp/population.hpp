#pragma once

#include <algorithm>
#include <vector>

#include "hhcrsp/decoder.hpp"

namespace hhcrsp {

struct Individual {
  Chromosome chromosome;
  double fitness = 0;
};

struct Population {
  std::vector<Individual> members;
  bool sorted = false;

  void sort() {
    std::stable_sort(members.begin(), members.end(),
                     [](const Individual& a, const Individual& b) {
                       return a.fitness < b.fitness;
                     });
    sorted = true;
  }

  const Individual& best() const { return members.front(); }
  std::size_t size() const { return members.size(); }
};

}  // namespace hhcrsp
