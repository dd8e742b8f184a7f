#pragma once

#include <string>

#include "hhcrsp/brkga.hpp"

namespace hhcrsp {

// Everything a solver run needs, aggregated for the config file and the CLI.
struct SolverSettings {
  BrkgaConfig brkga;
  IprConfig ipr;
  bool ipr_enabled = true;
  DecoderConfig decoder;
  Weights weights;
  int workers = 1;
};

// Applies one key=value pair; throws std::invalid_argument on unknown keys
// or unparsable values. Empty values reset optional fields.
void apply_setting(SolverSettings& s, const std::string& key,
                   const std::string& value);

// key=value lines, '#' comments, blank lines ignored.
SolverSettings parse_settings(std::istream& in,
                              SolverSettings base = SolverSettings{});
SolverSettings load_settings(const std::string& path,
                             SolverSettings base = SolverSettings{});

void write_settings(const SolverSettings& s, std::ostream& out);

}  // namespace hhcrsp
