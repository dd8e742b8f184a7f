#include "hhcrsp/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hhcrsp {

std::vector<int> sort_tasks(const Chromosome& ch, const Instance& inst) {
  const int nc = inst.num_patients();
  if (ch.keys.size() != static_cast<std::size_t>(nc) + 2)
    throw std::invalid_argument("chromosome length must be |C|+2");
  std::vector<int> order(static_cast<std::size_t>(nc));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ch.keys[a - 1] < ch.keys[b - 1];
  });
  return order;
}

InsertionState::InsertionState(const Instance& inst, const Weights& w)
    : inst_(inst),
      weights_(w),
      location_(static_cast<std::size_t>(inst.num_caregivers()), 0),
      leave_(static_cast<std::size_t>(inst.num_caregivers()), 0.0),
      workload_(static_cast<std::size_t>(inst.num_caregivers()), 0.0),
      routes_(static_cast<std::size_t>(inst.num_caregivers())) {
  for (int v = 1; v <= inst.num_caregivers(); ++v)
    routes_[v - 1].caregiver = v;
}

InsertionCandidate InsertionState::score(int patient, int v1, int v2,
                                         bool convex_hull) const {
  const Patient& p = inst_.patient(patient);
  const ServiceTypeId s1 = p.demands[0].service;
  if (!inst_.caregiver(v1).has_skill(s1))
    throw std::logic_error("caregiver not qualified for first service");
  if (p.is_double()) {
    if (v2 < 1 || v2 == v1)
      throw std::logic_error("double service needs a second, distinct caregiver");
    if (!inst_.caregiver(v2).has_skill(p.demands[1].service))
      throw std::logic_error("caregiver not qualified for second service");
  } else if (v2 != 0) {
    throw std::logic_error("single service takes no second caregiver");
  }

  InsertionCandidate c;
  const int loc1 = location_[v1 - 1];
  const double arrival1 =
      std::max(p.tw_start, leave_[v1 - 1] + inst_.travel_time(loc1, patient));
  double dist = inst_.travel_time(loc1, patient);
  c.legs = dist;

  if (!p.is_double()) {
    const double z = std::max(0.0, arrival1 - p.tw_end);
    c.tard_delta = z;
    c.tmax_visit = z;
    c.start1 = arrival1;
    if (convex_hull)
      dist += inst_.travel_time(patient, 0) - inst_.travel_time(loc1, 0);
  } else {
    const int loc2 = location_[v2 - 1];
    const double arrival2 = std::max(
        p.tw_start, leave_[v2 - 1] + inst_.travel_time(loc2, patient));
    dist += inst_.travel_time(loc2, patient);
    c.legs = dist;
    if (convex_hull) {
      dist += inst_.travel_time(patient, 0) - inst_.travel_time(loc1, 0);
      dist += inst_.travel_time(patient, 0) - inst_.travel_time(loc2, 0);
    }
    if (p.is_simultaneous()) {
      const double start = std::max(arrival1, arrival2);
      const double z = std::max(0.0, start - p.tw_end);
      c.tard_delta = 2 * z;
      c.tmax_visit = z;
      c.start1 = start;
      c.start2 = start;
    } else {
      double start1 = arrival1;
      const double start2 = std::max(arrival1 + p.sep_min, arrival2);
      if (start2 - start1 > p.sep_max) {
        // the second caregiver arrived too late: the first one waits. The
        // max() keeps rounding from pulling the start below the arrival.
        start1 = std::max(arrival1, start2 - p.sep_max);
      }
      const double z1 = std::max(0.0, start1 - p.tw_end);
      const double z2 = std::max(0.0, start2 - p.tw_end);
      c.tard_delta = z1 + z2;
      c.tmax_visit = std::max(z1, z2);
      c.start1 = start1;
      c.start2 = start2;
    }
  }

  c.score = weights_.dist * (dist + running_travel()) +
            weights_.tard * (c.tard_delta + tard_total_) +
            weights_.tmax * std::max(c.tmax_visit, tmax_total_);
  return c;
}

void InsertionState::commit(int patient, int v1, int v2,
                            const InsertionCandidate& c) {
  const Patient& p = inst_.patient(patient);

  auto append = [&](int v, ServiceTypeId s, double start) {
    Route& route = routes_[v - 1];
    Visit visit;
    visit.patient = patient;
    visit.service = s;
    visit.start = start;
    visit.tardiness = std::max(0.0, start - p.tw_end);
    route.visits.push_back(visit);
    return_total_ -= inst_.travel_time(location_[v - 1], 0);
    return_total_ += inst_.travel_time(patient, 0);
    location_[v - 1] = patient;
    leave_[v - 1] = start + p.duration_of(s);
    workload_[v - 1] += p.duration_of(s);
  };

  append(v1, p.demands[0].service, c.start1);
  if (p.is_double()) append(v2, p.demands[1].service, c.start2);

  legs_total_ += c.legs;
  tard_total_ += c.tard_delta;
  tmax_total_ = std::max(tmax_total_, c.tmax_visit);
}

DecodedSolution InsertionState::finish() const {
  DecodedSolution sol;
  sol.routes = routes_;
  // Canonical recomputation; mirrors evaluate() so the stored components are
  // bitwise identical to a from-scratch evaluation.
  CostComponents c;
  for (const Route& route : sol.routes) {
    if (route.visits.empty()) continue;
    double route_dist = 0;
    int prev = 0;
    for (const Visit& visit : route.visits) {
      route_dist += inst_.travel_time(prev, visit.patient);
      const double z =
          std::max(0.0, visit.start - inst_.patient(visit.patient).tw_end);
      c.tard += z;
      c.tmax = std::max(c.tmax, z);
      prev = visit.patient;
    }
    route_dist += inst_.travel_time(prev, 0);
    c.dist += route_dist;
  }
  c.objective =
      weights_.dist * c.dist + weights_.tard * c.tard + weights_.tmax * c.tmax;
  sol.cost = c;
  return sol;
}

DecodedSolution decode(const Chromosome& ch, const Instance& inst,
                       const DecoderConfig& cfg, const Weights& w) {
  const int nc = inst.num_patients();
  if (ch.keys.size() != static_cast<std::size_t>(nc) + 2)
    throw std::invalid_argument("chromosome length must be |C|+2");
  for (double k : ch.keys)
    if (!(k >= 0.0 && k < 1.0))
      throw std::invalid_argument("chromosome keys must lie in [0,1)");

  const bool full = cfg.mode == DecoderMode::full;
  const bool convex_hull = full && ch.keys[static_cast<std::size_t>(nc)] >= 0.5;
  const bool balance = full && ch.keys[static_cast<std::size_t>(nc) + 1] >= 0.5;

  const std::vector<int> tasks = sort_tasks(ch, inst);
  InsertionState state(inst, w);

  std::vector<std::vector<int>> qualified(
      static_cast<std::size_t>(inst.num_services) + 1);
  for (ServiceTypeId s = 1; s <= inst.num_services; ++s)
    qualified[static_cast<std::size_t>(s)] = inst.qualified(s);

  for (int task : tasks) {
    const Patient& p = inst.patient(task);
    const std::vector<int>& q1 =
        qualified[static_cast<std::size_t>(p.demands[0].service)];
    const std::vector<int>& q2 =
        qualified[static_cast<std::size_t>(
            p.is_double() ? p.demands[1].service : p.demands[0].service)];

    double best_score = std::numeric_limits<double>::infinity();
    int best_v1 = 0, best_v2 = 0;
    InsertionCandidate best_candidate;
    bool found = false;

    auto consider = [&](int v1, int v2) {
      InsertionCandidate cand = state.score(task, v1, v2, convex_hull);
      double score = cand.score;
      if (balance) {
        score += state.workload(v1);
        if (v2 != 0) score += state.workload(v2);
      }
      bool take;
      if (full && found &&
          std::fabs(score - best_score) <= cfg.tie_tolerance) {
        // equal-cost candidates advance only when the task's own key says so
        take = ch.keys[task - 1] >= 0.5;
      } else {
        take = score < best_score;
      }
      if (take) {
        best_score = score;
        best_v1 = v1;
        best_v2 = v2;
        best_candidate = cand;
        found = true;
      }
    };

    if (!p.is_double()) {
      for (int v1 : q1) consider(v1, 0);
    } else {
      for (int v1 : q1)
        for (int v2 : q2)
          if (v2 != v1) consider(v1, v2);
    }

    if (!found)
      throw std::invalid_argument(
          "no qualified caregiver assignment for patient " +
          std::to_string(task));
    state.commit(task, best_v1, best_v2, best_candidate);
  }

  return state.finish();
}

}  // namespace hhcrsp
