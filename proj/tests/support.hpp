#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hhcrsp/decoder.hpp"
#include "hhcrsp/instance.hpp"
#include "hhcrsp/rng.hpp"

namespace hhcrsp::test {

struct PatientSpec {
  double x = 0, y = 0;
  double e = 0, l = 120;
  std::vector<std::pair<int, double>> demands;  // (service, duration)
  double sep_min = 0, sep_max = 0;
};

// Instance from explicit pieces. Travel is Euclidean over the coordinates
// (depot at origin) unless an explicit row-major (|C|+1)^2 matrix is given.
Instance build_instance(const std::vector<PatientSpec>& patients,
                        const std::vector<std::vector<int>>& skills,
                        int num_services = 6, double horizon = 600,
                        const std::vector<double>& matrix = {});

Chromosome random_chromosome(int num_patients, Rng& rng);

// Desk-scale random instance with a controlled double-service mix; time
// windows are tightened so tardiness actually occurs.
Instance random_tiny_instance(std::uint64_t seed, int num_sim, int num_prec);

// Random benchmark-sized instance (subsets A..C, rotating with the seed).
Instance random_small_instance(std::uint64_t seed);

// O(n^2) discordant-pair count, the reference for kendall_tau.
long naive_kendall(const std::vector<int>& a, const std::vector<int>& b);

// Independent closed-form recount of what the model exporter must emit.
struct MipRecount {
  long binary = 0;
  long continuous = 0;
  long constraints = 0;
};
MipRecount mip_recount(const Instance& inst);

}  // namespace hhcrsp::test
