#include "hhcrsp/mip_export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace hhcrsp {

namespace {

std::string num(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[40];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

struct Arc {
  int i, j, v;
  ServiceTypeId s;

  std::string name() const {
    return "x_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
           std::to_string(v) + "_" + std::to_string(s);
  }
};

std::string t_name(int i, int v, ServiceTypeId s) {
  return "t_" + std::to_string(i) + "_" + std::to_string(v) + "_" +
         std::to_string(s);
}

std::string z_name(int i, ServiceTypeId s) {
  return "z_" + std::to_string(i) + "_" + std::to_string(s);
}

// builds one constraint line, wrapping long expressions
class RowWriter {
 public:
  explicit RowWriter(std::ostream& out) : out_(out) {}

  void begin(const std::string& name) {
    out_ << ' ' << name << ':';
    terms_ = 0;
  }
  void term(double coeff, const std::string& var) {
    if (coeff == 0) return;
    if (terms_ > 0 && terms_ % 8 == 0) out_ << "\n   ";
    if (coeff < 0) {
      out_ << " - ";
      coeff = -coeff;
    } else {
      out_ << (terms_ == 0 ? " " : " + ");
    }
    if (coeff != 1) out_ << num(coeff) << ' ';
    out_ << var;
    ++terms_;
  }
  void end(const std::string& rel, double rhs) {
    out_ << ' ' << rel << ' ' << num(rhs) << "\n";
  }

 private:
  std::ostream& out_;
  int terms_ = 0;
};

}  // namespace

MipStats export_mip(const Instance& inst, const Weights& w,
                    std::ostream& out) {
  inst.check_invariants();
  const int nc = inst.num_patients();
  const int nv = inst.num_caregivers();
  const int ns = inst.num_services;
  const double M = inst.big_m;

  auto demanded = [&](int i, ServiceTypeId s) {
    return inst.patient(i).demands_service(s);
  };
  auto skilled = [&](int v, ServiceTypeId s) {
    return inst.caregiver(v).has_skill(s);
  };
  auto serves = [&](int v, int i) {
    for (const auto& d : inst.patient(i).demands)
      if (skilled(v, d.service)) return true;
    return false;
  };

  // Arc variables: service arcs into j where the vehicle is qualified and the
  // service demanded; return arcs to the depot tagged by the service that
  // placed the vehicle at the origin. Canonical (i, j, v, s) order.
  std::vector<Arc> arcs;
  for (int i = 0; i <= nc; ++i) {
    for (int j = 0; j <= nc; ++j) {
      if (i == j) continue;
      for (int v = 1; v <= nv; ++v) {
        for (ServiceTypeId s = 1; s <= ns; ++s) {
          const bool keep = j == 0 ? (i >= 1 && demanded(i, s) && skilled(v, s))
                                   : (demanded(j, s) && skilled(v, s));
          if (keep) arcs.push_back({i, j, v, s});
        }
      }
    }
  }

  MipStats stats;
  stats.big_m = M;
  stats.num_binary_vars = static_cast<long>(arcs.size());
  stats.num_continuous_vars =
      static_cast<long>(nc + 1) * nv * ns + static_cast<long>(nc) * ns + 3;

  out << "\\ HHCRSP model, instance " << inst.name << "\n";
  out << "Minimize\n obj: " << num(w.dist) << " D + " << num(w.tard)
      << " T + " << num(w.tmax) << " Tmax\n";
  out << "Subject To\n";
  RowWriter row(out);

  // total travel time
  row.begin("def_D");
  for (const Arc& a : arcs) row.term(inst.travel_time(a.i, a.j), a.name());
  row.term(-1, "D");
  row.end("=", 0);
  ++stats.rows_cost_defs;

  // total tardiness
  row.begin("def_T");
  for (int i = 1; i <= nc; ++i)
    for (ServiceTypeId s = 1; s <= ns; ++s) row.term(1, z_name(i, s));
  row.term(-1, "T");
  row.end("=", 0);
  ++stats.rows_cost_defs;

  // largest tardiness
  for (int i = 1; i <= nc; ++i) {
    for (ServiceTypeId s = 1; s <= ns; ++s) {
      row.begin("tmax_" + std::to_string(i) + "_" + std::to_string(s));
      row.term(1, "Tmax");
      row.term(-1, z_name(i, s));
      row.end(">=", 0);
      ++stats.rows_tmax;
    }
  }

  // each vehicle leaves the depot at most once and must come back
  for (int v = 1; v <= nv; ++v) {
    bool any = false;
    for (const Arc& a : arcs) any |= a.v == v && (a.i == 0 || a.j == 0);
    if (!any) continue;
    row.begin("depot_" + std::to_string(v));
    for (const Arc& a : arcs) {
      if (a.v != v) continue;
      if (a.i == 0) row.term(1, a.name());
      if (a.j == 0) row.term(-1, a.name());
    }
    row.end("=", 0);
    row.begin("depart_" + std::to_string(v));
    for (const Arc& a : arcs)
      if (a.v == v && a.i == 0) row.term(1, a.name());
    row.end("<=", 1);
    stats.rows_depot_flow += 2;
  }

  // flow conservation at served patients
  for (int i = 1; i <= nc; ++i) {
    for (int v = 1; v <= nv; ++v) {
      if (!serves(v, i)) continue;
      row.begin("flow_" + std::to_string(i) + "_" + std::to_string(v));
      for (const Arc& a : arcs) {
        if (a.v != v) continue;
        if (a.j == i) row.term(1, a.name());
        if (a.i == i) row.term(-1, a.name());
      }
      row.end("=", 0);
      ++stats.rows_node_flow;
    }
  }

  // every demanded service performed exactly once by a skilled vehicle
  for (int i = 1; i <= nc; ++i) {
    for (const auto& dem : inst.patient(i).demands) {
      row.begin("assign_" + std::to_string(i) + "_" +
                std::to_string(dem.service));
      for (const Arc& a : arcs)
        if (a.j == i && a.s == dem.service) row.term(1, a.name());
      row.end("=", 1);
      ++stats.rows_assignment;
    }
  }

  // start-time ordering along used arcs
  for (const Arc& a : arcs) {
    if (a.j == 0) continue;
    if (a.i == 0) {
      row.begin("order_0_" + std::to_string(a.j) + "_" + std::to_string(a.v) +
                "_" + std::to_string(a.s) + "_" + std::to_string(a.s));
      row.term(1, t_name(0, a.v, a.s));
      row.term(-1, t_name(a.j, a.v, a.s));
      row.term(M, a.name());
      row.end("<=", M - inst.travel_time(0, a.j));
      ++stats.rows_ordering;
      continue;
    }
    for (const auto& dem : inst.patient(a.i).demands) {
      if (!skilled(a.v, dem.service)) continue;
      row.begin("order_" + std::to_string(a.i) + "_" + std::to_string(a.j) +
                "_" + std::to_string(a.v) + "_" + std::to_string(dem.service) +
                "_" + std::to_string(a.s));
      row.term(1, t_name(a.i, a.v, dem.service));
      row.term(-1, t_name(a.j, a.v, a.s));
      row.term(M, a.name());
      row.end("<=", M - dem.duration - inst.travel_time(a.i, a.j));
      ++stats.rows_ordering;
    }
  }

  // soft window ends define tardiness
  for (int i = 1; i <= nc; ++i) {
    for (int v = 1; v <= nv; ++v) {
      for (ServiceTypeId s = 1; s <= ns; ++s) {
        row.begin("twend_" + std::to_string(i) + "_" + std::to_string(v) +
                  "_" + std::to_string(s));
        row.term(1, t_name(i, v, s));
        row.term(-1, z_name(i, s));
        row.end("<=", inst.patient(i).tw_end);
        ++stats.rows_window_end;
      }
    }
  }

  // separation window between the two starts of double-service patients
  for (int i = 1; i <= nc; ++i) {
    const Patient& p = inst.patient(i);
    if (!p.is_double()) continue;
    const ServiceTypeId s1 = p.demands[0].service;
    const ServiceTypeId s2 = p.demands[1].service;
    for (int v1 = 1; v1 <= nv; ++v1) {
      if (!skilled(v1, s1)) continue;
      for (int v2 = 1; v2 <= nv; ++v2) {
        if (!skilled(v2, s2)) continue;
        const std::string suffix = std::to_string(i) + "_" +
                                   std::to_string(v1) + "_" +
                                   std::to_string(v2);
        row.begin("sepmin_" + suffix);
        row.term(1, t_name(i, v2, s2));
        row.term(-1, t_name(i, v1, s1));
        for (const Arc& a : arcs) {
          if (a.j != i) continue;
          if (a.v == v1 && a.s == s1) row.term(-M, a.name());
          if (a.v == v2 && a.s == s2) row.term(-M, a.name());
        }
        row.end(">=", p.sep_min - 2 * M);
        row.begin("sepmax_" + suffix);
        row.term(1, t_name(i, v2, s2));
        row.term(-1, t_name(i, v1, s1));
        for (const Arc& a : arcs) {
          if (a.j != i) continue;
          if (a.v == v1 && a.s == s1) row.term(M, a.name());
          if (a.v == v2 && a.s == s2) row.term(M, a.name());
        }
        row.end("<=", p.sep_max + 2 * M);
        stats.rows_separation += 2;
      }
    }
  }

  // start-time lower bounds; these lines also materialize every t column
  out << "Bounds\n";
  for (int i = 0; i <= nc; ++i) {
    const double lb = i == 0 ? 0 : inst.patient(i).tw_start;
    for (int v = 1; v <= nv; ++v)
      for (ServiceTypeId s = 1; s <= ns; ++s)
        out << ' ' << t_name(i, v, s) << " >= " << num(lb) << "\n";
  }

  out << "Binary\n";
  for (const Arc& a : arcs) out << ' ' << a.name() << "\n";
  out << "End\n";

  stats.num_constraints = stats.rows_cost_defs + stats.rows_tmax +
                          stats.rows_depot_flow + stats.rows_node_flow +
                          stats.rows_assignment + stats.rows_ordering +
                          stats.rows_window_end + stats.rows_separation;

  out << "\\ stats: binary=" << stats.num_binary_vars
      << " continuous=" << stats.num_continuous_vars
      << " constraints=" << stats.num_constraints << " bigM=" << num(M)
      << "\n";
  if (!out) throw std::runtime_error("write failure while exporting model");
  return stats;
}

}  // namespace hhcrsp
