#include "hhcrsp/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hhcrsp {

Chromosome synthetic_chromosome(const std::vector<int>& order,
                                int tie_threshold, bool convex_hull,
                                bool balance, int num_patients) {
  if (static_cast<int>(order.size()) != num_patients)
    throw std::invalid_argument("order must cover every patient");
  Chromosome ch;
  ch.keys.assign(static_cast<std::size_t>(num_patients) + 2, 0.0);
  // ascending keys along the order; ranks below the threshold stay in
  // [0, 0.5), the rest in [0.5, 1)
  for (int rank = 0; rank < num_patients; ++rank) {
    const double spread =
        (rank + 0.5) / (2.0 * static_cast<double>(num_patients + 1));
    const double key = rank < tie_threshold ? spread : 0.5 + spread;
    ch.keys[static_cast<std::size_t>(order[rank]) - 1] = key;
  }
  ch.keys[static_cast<std::size_t>(num_patients)] = convex_hull ? 0.75 : 0.25;
  ch.keys[static_cast<std::size_t>(num_patients) + 1] = balance ? 0.75 : 0.25;
  return ch;
}

namespace {

// true if some patient has more than one feasible caregiver assignment, i.e.
// the equal-cost tie-break could ever fire
bool ties_possible(const Instance& inst) {
  for (const Patient& p : inst.patients) {
    if (!p.is_double()) {
      if (inst.qualified(p.demands[0].service).size() > 1) return true;
    } else {
      int combos = 0;
      for (int v1 : inst.qualified(p.demands[0].service))
        for (int v2 : inst.qualified(p.demands[1].service))
          if (v1 != v2) ++combos;
      if (combos > 1) return true;
    }
  }
  return false;
}

void keep_if_better(const DecodedSolution& sol,
                    std::optional<DecodedSolution>& best,
                    std::string& best_tag) {
  std::string tag;
  if (best && sol.cost.objective > best->cost.objective) return;
  if (best && sol.cost.objective == best->cost.objective) {
    tag = serialize_solution(sol);
    if (tag >= best_tag) return;  // deterministic tie resolution
  }
  if (tag.empty()) tag = serialize_solution(sol);
  best = sol;
  best_tag = std::move(tag);
}

}  // namespace

OracleResult best_decoder_reachable(const Instance& inst,
                                    const DecoderConfig& cfg,
                                    const Weights& w) {
  const int nc = inst.num_patients();
  if (nc > 7)
    throw std::invalid_argument(
        "decoder-space enumeration is limited to |C| <= 7");
  if (nc == 0) throw std::invalid_argument("instance has no patients");

  const bool full = cfg.mode == DecoderMode::full;
  std::vector<int> thresholds;
  if (full && ties_possible(inst)) {
    for (int t = 0; t <= nc; ++t) thresholds.push_back(t);
  } else {
    thresholds.push_back(nc);  // all tie flags off
  }
  std::vector<std::pair<bool, bool>> toggles;
  if (full) {
    toggles = {{false, false}, {false, true}, {true, false}, {true, true}};
  } else {
    toggles = {{false, false}};
  }

  std::vector<int> order(static_cast<std::size_t>(nc));
  std::iota(order.begin(), order.end(), 1);

  OracleResult result;
  std::optional<DecodedSolution> best;
  std::string best_tag;
  do {
    for (const auto& [hull, balance] : toggles) {
      for (int t : thresholds) {
        const Chromosome ch =
            synthetic_chromosome(order, t, hull, balance, nc);
        const DecodedSolution sol = decode(ch, inst, cfg, w);
        ++result.space_size;
        keep_if_better(sol, best, best_tag);
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));

  result.best_solution = *best;
  result.best_cost = best->cost;
  return result;
}

OracleResult best_routing(const Instance& inst, const Weights& w) {
  const int nc = inst.num_patients();
  const int nv = inst.num_caregivers();
  if (nc > 4 || nv > 3)
    throw std::invalid_argument(
        "routing enumeration is limited to |C| <= 4, |V| <= 3");
  if (nc == 0) throw std::invalid_argument("instance has no patients");

  // all qualified assignments per patient: (v1, v2), v2 = 0 for singles
  std::vector<std::vector<std::pair<int, int>>> options(
      static_cast<std::size_t>(nc));
  for (const Patient& p : inst.patients) {
    auto& opts = options[static_cast<std::size_t>(p.id) - 1];
    if (!p.is_double()) {
      for (int v : inst.qualified(p.demands[0].service))
        opts.emplace_back(v, 0);
    } else {
      for (int v1 : inst.qualified(p.demands[0].service))
        for (int v2 : inst.qualified(p.demands[1].service))
          if (v1 != v2) opts.emplace_back(v1, v2);
    }
    if (opts.empty())
      throw std::invalid_argument(
          "no qualified assignment for patient " + std::to_string(p.id));
  }

  std::vector<int> order(static_cast<std::size_t>(nc));
  std::iota(order.begin(), order.end(), 1);

  OracleResult result;
  std::optional<DecodedSolution> best;
  std::string best_tag;

  std::vector<std::size_t> choice(static_cast<std::size_t>(nc), 0);
  while (true) {
    std::vector<int> perm = order;
    do {
      InsertionState state(inst, w);
      for (int task : perm) {
        const auto [v1, v2] = options[static_cast<std::size_t>(task) - 1]
                                     [choice[static_cast<std::size_t>(task) -
                                             1]];
        const InsertionCandidate cand = state.score(task, v1, v2, false);
        state.commit(task, v1, v2, cand);
      }
      const DecodedSolution sol = state.finish();
      ++result.space_size;
      if (!validate(sol, inst).empty())
        throw std::logic_error("enumerated candidate failed validation");
      keep_if_better(sol, best, best_tag);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // advance the assignment counter
    std::size_t pos = 0;
    while (pos < choice.size()) {
      if (++choice[pos] < options[pos].size()) break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
  }

  result.best_solution = *best;
  result.best_cost = best->cost;
  return result;
}

}  // namespace hhcrsp
