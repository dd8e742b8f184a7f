#pragma once

#include <iosfwd>

#include "hhcrsp/eval.hpp"
#include "hhcrsp/instance.hpp"

namespace hhcrsp {

struct MipStats {
  long num_binary_vars = 0;
  long num_continuous_vars = 0;
  long num_constraints = 0;
  long rows_cost_defs = 0;    // definitions of the three cost terms: 2
  long rows_tmax = 0;         // |C| * |S|
  long rows_depot_flow = 0;   // balance + departure cap per active vehicle
  long rows_node_flow = 0;    // one per (patient, vehicle) the vehicle serves
  long rows_assignment = 0;   // one per demanded (patient, service)
  long rows_ordering = 0;     // big-M start-time chains along arcs
  long rows_window_end = 0;   // |C| * |V| * |S|
  long rows_separation = 0;   // two per (double patient, qualified pair)
  double big_m = 0;
};

// Writes the full model in LP text format with a canonical variable and
// constraint ordering, so re-exports are byte-identical. Arc variables exist
// only where the vehicle is qualified and the service demanded; start-time
// lower bounds live in the bounds section.
MipStats export_mip(const Instance& inst, const Weights& w, std::ostream& out);

}  // namespace hhcrsp
