#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hhcrsp/population.hpp"
#include "hhcrsp/rng.hpp"

namespace hhcrsp {

struct IprConfig {
  int pairs = 95;  // relink attempts per island pair and invocation
  enum class Selection { best, random };
  Selection selection = Selection::random;
  double path_pct = 0.33754;  // fraction of positions walked
  int frequency = 40;         // generations between invocations
  double min_distance = 0;    // permutation-distance gate

  void check() const;
};

// Number of discordant pairs between two permutations of the same index set.
// Throws std::invalid_argument on length mismatch or non-permutation input.
long kendall_tau(std::span<const int> a, std::span<const int> b);

// Index permutation induced by ascending key order (ties by position).
std::vector<int> key_permutation(std::span<const double> keys);

struct RelinkResult {
  Chromosome chromosome;
  double fitness = 0;
  int step = 0;  // walk step that produced it
};

struct RelinkStats {
  long distance = 0;   // permutation distance between the endpoints
  int steps = 0;       // intermediates decoded
  bool gated = false;  // skipped by the distance gate
};

// Walks key-swap intermediates between base and guide, alternating the side
// being modified, and decodes each one. Returns the best intermediate that
// strictly beats both endpoints, or nothing (including when the permutation
// distance is at or below the gate).
std::optional<RelinkResult> relink(
    const Chromosome& base, const Chromosome& guide, const Instance& inst,
    const DecoderConfig& dcfg, const Weights& w, const IprConfig& cfg,
    std::optional<double> base_fitness = std::nullopt,
    std::optional<double> guide_fitness = std::nullopt, int workers = 1,
    RelinkStats* stats = nullptr);

struct IprEvent {
  long generation = 0;
  int from_island = 0;  // base side
  int to_island = 0;    // guide side, receives the injection
  long distance = 0;
  int steps = 0;
  bool improved = false;
  double new_fitness = 0;
};

// Runs relink over elite pairs of ring-adjacent islands (the island itself
// when there is only one). Improving chromosomes replace the worst member of
// the guide-side island, at most max_injections per invocation.
std::vector<IprEvent> apply_ipr(std::vector<Population>& islands,
                                const IprConfig& cfg, int num_elite,
                                int max_injections, const Instance& inst,
                                const DecoderConfig& dcfg, const Weights& w,
                                Rng& rng, int workers = 1);

}  // namespace hhcrsp
