#include "hhcrsp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace hhcrsp {

namespace {

constexpr double kFeasEps = 1e-6;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::unknown_id: return "unknown-id";
    case ViolationKind::missing_service: return "missing-service";
    case ViolationKind::duplicate_service: return "duplicate-service";
    case ViolationKind::unskilled_caregiver: return "unskilled-caregiver";
    case ViolationKind::route_timing: return "route-timing";
    case ViolationKind::window_start: return "window-start";
    case ViolationKind::separation: return "separation";
  }
  return "?";
}

std::string to_string(const Violation& v) {
  std::ostringstream oss;
  oss << to_string(v.kind) << " patient=" << v.patient
      << " caregiver=" << v.caregiver << " service=" << v.service;
  if (!v.detail.empty()) oss << " (" << v.detail << ")";
  return oss.str();
}

CostComponents evaluate(const DecodedSolution& sol, const Instance& inst,
                        const Weights& w) {
  const int nc = inst.num_patients();
  const int nv = inst.num_caregivers();
  if (sol.routes.size() != static_cast<std::size_t>(nv))
    throw std::out_of_range("solution must carry one route per caregiver");

  CostComponents c;
  for (int v = 1; v <= nv; ++v) {
    const Route& route = sol.routes[v - 1];
    if (route.visits.empty()) continue;
    double route_dist = 0;
    int prev = 0;
    for (const Visit& visit : route.visits) {
      if (visit.patient < 1 || visit.patient > nc)
        throw std::out_of_range("unknown patient id " +
                                std::to_string(visit.patient));
      route_dist += inst.travel_time(prev, visit.patient);
      const double z =
          std::max(0.0, visit.start - inst.patient(visit.patient).tw_end);
      c.tard += z;
      c.tmax = std::max(c.tmax, z);
      prev = visit.patient;
    }
    route_dist += inst.travel_time(prev, 0);
    c.dist += route_dist;
  }
  c.objective = w.dist * c.dist + w.tard * c.tard + w.tmax * c.tmax;
  return c;
}

std::vector<Violation> validate(const DecodedSolution& sol,
                                const Instance& inst) {
  std::vector<Violation> out;
  const int nc = inst.num_patients();
  const int nv = inst.num_caregivers();

  if (sol.routes.size() != static_cast<std::size_t>(nv)) {
    out.push_back({ViolationKind::unknown_id, 0, 0, 0,
                   "expected " + std::to_string(nv) + " routes, got " +
                       std::to_string(sol.routes.size())});
    return out;
  }

  // (patient, service) -> visits seen, to check single assignment
  std::map<std::pair<int, ServiceTypeId>, int> seen;

  for (int v = 1; v <= nv; ++v) {
    const Route& route = sol.routes[v - 1];
    if (route.caregiver != v) {
      out.push_back({ViolationKind::unknown_id, 0, route.caregiver, 0,
                     "route slot " + std::to_string(v) +
                         " labeled with caregiver " +
                         std::to_string(route.caregiver)});
      continue;
    }
    const Caregiver& cg = inst.caregiver(v);
    double leave = 0;
    int prev = 0;
    for (const Visit& visit : route.visits) {
      if (visit.patient < 1 || visit.patient > nc) {
        out.push_back({ViolationKind::unknown_id, visit.patient, v,
                       visit.service, "patient id out of range"});
        continue;
      }
      const Patient& p = inst.patient(visit.patient);
      if (!p.demands_service(visit.service)) {
        out.push_back({ViolationKind::duplicate_service, visit.patient, v,
                       visit.service, "service not demanded by patient"});
        continue;
      }
      ++seen[{visit.patient, visit.service}];
      if (!cg.has_skill(visit.service))
        out.push_back({ViolationKind::unskilled_caregiver, visit.patient, v,
                       visit.service, ""});
      const double earliest = leave + inst.travel_time(prev, visit.patient);
      if (visit.start < earliest - kFeasEps)
        out.push_back({ViolationKind::route_timing, visit.patient, v,
                       visit.service,
                       "start " + fmt_double(visit.start) +
                           " before reachable time " + fmt_double(earliest)});
      if (visit.start < p.tw_start - kFeasEps)
        out.push_back({ViolationKind::window_start, visit.patient, v,
                       visit.service,
                       "start " + fmt_double(visit.start) + " before " +
                           fmt_double(p.tw_start)});
      leave = visit.start + p.duration_of(visit.service);
      prev = visit.patient;
    }
  }

  // coverage: every demanded pair exactly once
  for (const Patient& p : inst.patients) {
    for (const auto& dem : p.demands) {
      const auto it = seen.find({p.id, dem.service});
      const int count = it == seen.end() ? 0 : it->second;
      if (count == 0)
        out.push_back(
            {ViolationKind::missing_service, p.id, 0, dem.service, ""});
      else if (count > 1)
        out.push_back({ViolationKind::duplicate_service, p.id, 0, dem.service,
                       "served " + std::to_string(count) + " times"});
    }
  }

  // separation between the two starts of each double-service patient
  for (const Patient& p : inst.patients) {
    if (!p.is_double()) continue;
    const ServiceTypeId s1 = p.demands[0].service;
    const ServiceTypeId s2 = p.demands[1].service;
    double start1 = 0, start2 = 0;
    int found = 0;
    for (const Route& route : sol.routes) {
      for (const Visit& visit : route.visits) {
        if (visit.patient != p.id) continue;
        if (visit.service == s1) {
          start1 = visit.start;
          ++found;
        } else if (visit.service == s2) {
          start2 = visit.start;
          ++found;
        }
      }
    }
    if (found != 2) continue;  // already reported as missing/duplicate
    const double gap = start2 - start1;
    if (gap < p.sep_min - kFeasEps || gap > p.sep_max + kFeasEps)
      out.push_back({ViolationKind::separation, p.id, 0, s2,
                     "gap " + fmt_double(gap) + " outside [" +
                         fmt_double(p.sep_min) + ", " + fmt_double(p.sep_max) +
                         "]"});
  }

  return out;
}

void serialize_solution(const DecodedSolution& sol, std::ostream& out) {
  for (const Route& route : sol.routes) {
    out << "ROUTE " << route.caregiver << "\n";
    for (const Visit& v : route.visits)
      out << "VISIT " << v.patient << ' ' << v.service << ' '
          << fmt_double(v.start) << "\n";
  }
  out << "COST " << fmt_double(sol.cost.dist) << ' '
      << fmt_double(sol.cost.tard) << ' ' << fmt_double(sol.cost.tmax) << ' '
      << fmt_double(sol.cost.objective) << "\n";
}

std::string serialize_solution(const DecodedSolution& sol) {
  std::ostringstream oss;
  serialize_solution(sol, oss);
  return oss.str();
}

DecodedSolution parse_solution(std::istream& in, const Instance& inst) {
  DecodedSolution sol;
  sol.routes.resize(static_cast<std::size_t>(inst.num_caregivers()));
  for (int v = 1; v <= inst.num_caregivers(); ++v)
    sol.routes[v - 1].caregiver = v;

  Route* current = nullptr;
  std::string line;
  int line_no = 0;
  bool have_cost = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream iss(line);
    std::string tag;
    if (!(iss >> tag)) continue;
    if (tag == "ROUTE") {
      int v = 0;
      if (!(iss >> v) || v < 1 || v > inst.num_caregivers())
        throw ParseError(line_no, "bad ROUTE line");
      current = &sol.routes[v - 1];
    } else if (tag == "VISIT") {
      if (!current) throw ParseError(line_no, "VISIT before ROUTE");
      Visit visit;
      if (!(iss >> visit.patient >> visit.service >> visit.start))
        throw ParseError(line_no, "bad VISIT line");
      if (visit.patient >= 1 && visit.patient <= inst.num_patients())
        visit.tardiness = std::max(
            0.0, visit.start - inst.patient(visit.patient).tw_end);
      current->visits.push_back(visit);
    } else if (tag == "COST") {
      if (!(iss >> sol.cost.dist >> sol.cost.tard >> sol.cost.tmax >>
            sol.cost.objective))
        throw ParseError(line_no, "bad COST line");
      have_cost = true;
    } else {
      throw ParseError(line_no, "unknown tag '" + tag + "'");
    }
  }
  if (!have_cost) throw ParseError(line_no, "missing COST footer");
  return sol;
}

}  // namespace hhcrsp
