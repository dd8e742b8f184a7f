#pragma once

#include <vector>

#include "hhcrsp/eval.hpp"
#include "hhcrsp/instance.hpp"

namespace hhcrsp {

// Genotype: |C|+2 keys in [0,1). The first |C| induce the task order, the
// last two toggle the convex-hull and workload-balancing options.
struct Chromosome {
  std::vector<double> keys;
};

enum class DecoderMode { simple, full };

struct DecoderConfig {
  DecoderMode mode = DecoderMode::full;
  // Margin under which two candidate costs count as equal for the key-driven
  // tie-break; real-valued travel times make exact equality fragile.
  double tie_tolerance = 1e-6;
};

// Patients ordered by ascending key, ties by ascending id.
std::vector<int> sort_tasks(const Chromosome& ch, const Instance& inst);

// Outcome of scoring one caregiver assignment for a task.
struct InsertionCandidate {
  double score = 0;       // merged objective used for the greedy comparison
  double legs = 0;        // travel actually added (no convex-hull terms)
  double tard_delta = 0;  // tardiness added by the new visit(s)
  double tmax_visit = 0;  // largest tardiness among the new visit(s)
  double start1 = 0;      // start of the (first) service
  double start2 = 0;      // start of the second service, doubles only
};

// Append-only construction state: per-caregiver position/clock/workload plus
// running cost totals. Shared by the decoder and the enumeration oracle so
// both apply identical timing rules.
class InsertionState {
 public:
  InsertionState(const Instance& inst, const Weights& w);

  // Scores appending `patient` with v1 on the higher-priority demand and v2
  // (0 = none) on the other. Throws if a caregiver lacks the skill.
  InsertionCandidate score(int patient, int v1, int v2,
                           bool convex_hull) const;

  // Appends the visits of a scored candidate and advances the state.
  void commit(int patient, int v1, int v2, const InsertionCandidate& c);

  double workload(int v) const { return workload_[v - 1]; }
  // Travel of the partial solution including current depot-return legs.
  double running_travel() const { return legs_total_ + return_total_; }
  double running_tardiness() const { return tard_total_; }
  double running_tmax() const { return tmax_total_; }

  // Routes built so far plus the canonical cost recomputation (adds the
  // final return legs).
  DecodedSolution finish() const;

 private:
  const Instance& inst_;
  Weights weights_;
  std::vector<int> location_;     // current node per caregiver
  std::vector<double> leave_;     // time the caregiver can depart
  std::vector<double> workload_;  // accumulated service minutes
  std::vector<Route> routes_;
  double legs_total_ = 0;
  double return_total_ = 0;
  double tard_total_ = 0;
  double tmax_total_ = 0;
};

// Greedy cheapest-insertion decoding of a chromosome. Deterministic pure
// function; the returned cost equals evaluate() on the returned routes bit
// for bit.
DecodedSolution decode(const Chromosome& ch, const Instance& inst,
                       const DecoderConfig& cfg = {}, const Weights& w = {});

}  // namespace hhcrsp
