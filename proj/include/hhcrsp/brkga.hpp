#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhcrsp/ipr.hpp"
#include "hhcrsp/population.hpp"
#include "hhcrsp/rng.hpp"

namespace hhcrsp {

enum class BiasFunction {
  constant,
  linear,
  loginverse,
  exponential,
  quadratic,
  cubic,
};

BiasFunction bias_from_string(const std::string& name);
std::string to_string(BiasFunction fn);

struct BrkgaConfig {
  int population_size = 1462;
  double elite_pct = 0.30678;
  double mutant_pct = 0.07575;
  int total_parents = 5;
  int elite_parents = 4;
  BiasFunction bias = BiasFunction::constant;
  int num_islands = 2;
  int immigrants = 73;
  int exchange_interval = 167;
  // Two-parent compatibility mode: allele taken from the elite parent with
  // this probability; forces total_parents=2, elite_parents=1.
  std::optional<double> classic_rho_e;
  std::uint64_t seed = 1;
  std::optional<int> stall_limit;  // default: ceil(|C| / 2)
  std::optional<long> max_generations;
  std::optional<double> max_seconds;

  int num_elite() const {
    return std::max(1, static_cast<int>(std::floor(elite_pct *
                                                   population_size)));
  }
  int num_mutants() const {
    return static_cast<int>(std::floor(mutant_pct * population_size));
  }
  void check() const;  // throws std::invalid_argument
};

// Rank weight of a parent (rank 1 = fittest). Strictly positive and
// nonincreasing in the rank.
double bias_weight(BiasFunction fn, int rank);

struct Parent {
  const Chromosome* chromosome = nullptr;
  double fitness = 0;
  bool elite = false;
};

// One offspring from a ranked parent list: every allele is drawn from a
// parent picked with probability proportional to its rank weight.
Chromosome mate(std::vector<Parent> parents, const BrkgaConfig& cfg, Rng& rng);

// One generational step: elites survive, fresh mutants come in, the rest of
// the next population is bred. New individuals are decoded for fitness
// (optionally in parallel); all randomness is drawn from `rng` in a fixed
// order regardless of `workers`.
Population evolve_generation(const Population& pop, const Instance& inst,
                             const DecoderConfig& dcfg, const Weights& w,
                             const BrkgaConfig& cfg, Rng& rng,
                             int workers = 1);

struct GenerationStats {
  long generation = 0;
  double best = 0;             // global incumbent, nonincreasing
  double mean = 0;             // over all individuals, all islands
  double stddev = 0;
  double elite_diversity = 0;  // fitness stddev over the pooled elite sets
};

struct ImmigrationEvent {
  long generation = 0;
  int from_island = 0;
  int to_island = 0;
  int count = 0;
};

struct RunReport {
  std::string instance_name;
  std::string instance_path;
  std::uint64_t seed = 0;
  BrkgaConfig config;
  std::optional<IprConfig> ipr;
  DecoderConfig decoder;
  Weights weights;
  int workers = 1;
  std::vector<GenerationStats> generations;  // entry 0 = initial population
  Chromosome best_chromosome;
  DecodedSolution best_solution;
  double best_fitness = 0;
  long generations_evolved = 0;
  int stall_limit_used = 0;
  long generations_since_improvement = 0;  // at exit
  std::string stop_reason;  // "stall" | "max_generations" | "max_seconds"
  double wall_seconds = 0;
  std::vector<ImmigrationEvent> immigrations;
  std::vector<IprEvent> ipr_events;
};

// Full evolutionary run over `num_islands` lockstep islands with periodic
// ring immigration and optional path-relinking. Deterministic for a fixed
// (instance, config, seed) triple, independent of `workers`.
RunReport run(const Instance& inst, const BrkgaConfig& cfg,
              const DecoderConfig& dcfg,
              const std::optional<IprConfig>& ipr_cfg, const Weights& w = {},
              int workers = 1);

}  // namespace hhcrsp
