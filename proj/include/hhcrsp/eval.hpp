#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hhcrsp/instance.hpp"

namespace hhcrsp {

struct Weights {
  double dist = 1.0 / 3.0;
  double tard = 1.0 / 3.0;
  double tmax = 1.0 / 3.0;
};

struct Visit {
  int patient = 0;
  ServiceTypeId service = 0;
  double start = 0;      // service start time
  double tardiness = 0;  // max(0, start - tw_end), kept for reporting
};

struct Route {
  int caregiver = 0;
  std::vector<Visit> visits;  // in traversal order
};

struct CostComponents {
  double dist = 0;
  double tard = 0;
  double tmax = 0;
  double objective = 0;
};

struct DecodedSolution {
  std::vector<Route> routes;  // one per caregiver, index = id - 1
  CostComponents cost;
};

enum class ViolationKind {
  unknown_id,
  missing_service,
  duplicate_service,
  unskilled_caregiver,
  route_timing,
  window_start,
  separation,
};

struct Violation {
  ViolationKind kind{};
  int patient = 0;
  int caregiver = 0;
  ServiceTypeId service = 0;
  std::string detail;
};

std::string to_string(ViolationKind kind);
std::string to_string(const Violation& v);

// Recomputes all cost components from the routes and stored start times.
// The accumulation order (route legs left to right, routes in caregiver
// order) is part of the contract: costs produced by the construction path
// must compare bit for bit against this function.
CostComponents evaluate(const DecodedSolution& sol, const Instance& inst,
                        const Weights& w = {});

// Exhaustive feasibility report; an empty result means the solution is
// feasible. Numeric checks use a 1e-6 slack so that rounding in legitimately
// tight schedules is not flagged.
std::vector<Violation> validate(const DecodedSolution& sol,
                                const Instance& inst);

void serialize_solution(const DecodedSolution& sol, std::ostream& out);
std::string serialize_solution(const DecodedSolution& sol);
DecodedSolution parse_solution(std::istream& in, const Instance& inst);

}  // namespace hhcrsp
