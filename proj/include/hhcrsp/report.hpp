#pragma once

#include <iosfwd>
#include <string>

#include "hhcrsp/brkga.hpp"

namespace hhcrsp {

// JSON serialization of a full run record. Doubles round-trip exactly.
void write_report_json(const RunReport& report, std::ostream& out);
RunReport read_report_json(std::istream& in, const Instance& inst);

// Flat per-run CSV row: instance,seed,best,avg,generations,seconds.
// `avg` is the mean fitness of the final combined population.
std::string run_csv_header();
std::string run_csv_row(const RunReport& report);

}  // namespace hhcrsp
