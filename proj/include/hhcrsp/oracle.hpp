#pragma once

#include "hhcrsp/decoder.hpp"
#include "hhcrsp/eval.hpp"

namespace hhcrsp {

struct OracleResult {
  CostComponents best_cost;
  DecodedSolution best_solution;
  long space_size = 0;  // candidates enumerated
};

// Exhausts the space reachable by the decoder: every task order, both
// toggles, and every realizable tie-break pattern (the per-task tie keys are
// nondecreasing 0/1 flags along the sorted order, so there are |C|+1 patterns,
// enumerated only when some task actually has alternative assignments).
// Requires |C| <= 7.
OracleResult best_decoder_reachable(const Instance& inst,
                                    const DecoderConfig& cfg,
                                    const Weights& w = {});

// Exhausts assignments of demands to qualified caregivers crossed with all
// append orders, scheduling each candidate by the same earliest-start rules
// the construction uses. Requires |C| <= 4 and |V| <= 3.
OracleResult best_routing(const Instance& inst, const Weights& w = {});

// Chromosome whose first |C| keys reproduce `order` exactly, with the tasks
// at rank >= tie_threshold carrying keys >= 0.5 (the tie-break flag) and the
// toggle keys set from the two flags.
Chromosome synthetic_chromosome(const std::vector<int>& order,
                                int tie_threshold, bool convex_hull,
                                bool balance, int num_patients);

}  // namespace hhcrsp
