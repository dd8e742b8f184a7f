#include "hhcrsp/settings.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hhcrsp {

namespace {

int to_int(const std::string& v) {
  std::size_t pos = 0;
  const int out = std::stoi(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("bad integer '" + v + "'");
  return out;
}

long to_long(const std::string& v) {
  std::size_t pos = 0;
  const long out = std::stol(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("bad integer '" + v + "'");
  return out;
}

double to_double(const std::string& v) {
  std::size_t pos = 0;
  const double out = std::stod(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("bad number '" + v + "'");
  return out;
}

std::uint64_t to_u64(const std::string& v) {
  std::size_t pos = 0;
  const unsigned long long out = std::stoull(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("bad seed '" + v + "'");
  return out;
}

}  // namespace

void apply_setting(SolverSettings& s, const std::string& key,
                   const std::string& value) {
  auto& b = s.brkga;
  if (key == "population_size") b.population_size = to_int(value);
  else if (key == "elite_pct") b.elite_pct = to_double(value);
  else if (key == "mutant_pct") b.mutant_pct = to_double(value);
  else if (key == "total_parents") b.total_parents = to_int(value);
  else if (key == "elite_parents") b.elite_parents = to_int(value);
  else if (key == "bias") b.bias = bias_from_string(value);
  else if (key == "num_islands") b.num_islands = to_int(value);
  else if (key == "immigrants") b.immigrants = to_int(value);
  else if (key == "exchange_interval") b.exchange_interval = to_int(value);
  else if (key == "classic_rho_e") {
    if (value.empty()) b.classic_rho_e.reset();
    else b.classic_rho_e = to_double(value);
  } else if (key == "seed") b.seed = to_u64(value);
  else if (key == "stall_limit") {
    if (value.empty()) b.stall_limit.reset();
    else b.stall_limit = to_int(value);
  } else if (key == "max_generations") {
    if (value.empty()) b.max_generations.reset();
    else b.max_generations = to_long(value);
  } else if (key == "max_seconds") {
    if (value.empty()) b.max_seconds.reset();
    else b.max_seconds = to_double(value);
  } else if (key == "ipr_enabled") {
    s.ipr_enabled = value == "1" || value == "true" || value == "yes";
  } else if (key == "ipr_pairs") s.ipr.pairs = to_int(value);
  else if (key == "ipr_selection") {
    if (value == "best") s.ipr.selection = IprConfig::Selection::best;
    else if (value == "random") s.ipr.selection = IprConfig::Selection::random;
    else throw std::invalid_argument("ipr_selection must be best|random");
  } else if (key == "ipr_path_pct") s.ipr.path_pct = to_double(value);
  else if (key == "ipr_frequency") s.ipr.frequency = to_int(value);
  else if (key == "ipr_min_distance") s.ipr.min_distance = to_double(value);
  else if (key == "decoder_mode") {
    if (value == "sd" || value == "simple") s.decoder.mode = DecoderMode::simple;
    else if (value == "fd" || value == "full") s.decoder.mode = DecoderMode::full;
    else throw std::invalid_argument("decoder_mode must be sd|fd");
  } else if (key == "tie_tolerance") s.decoder.tie_tolerance = to_double(value);
  else if (key == "lambda1") s.weights.dist = to_double(value);
  else if (key == "lambda2") s.weights.tard = to_double(value);
  else if (key == "lambda3") s.weights.tmax = to_double(value);
  else if (key == "workers") s.workers = to_int(value);
  else throw std::invalid_argument("unknown setting '" + key + "'");
}

SolverSettings parse_settings(std::istream& in, SolverSettings base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("settings line " + std::to_string(line_no) +
                                  ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto ke = key.find_last_not_of(" \t");
    key = key.substr(0, ke == std::string::npos ? 0 : ke + 1);
    const auto vb = value.find_first_not_of(" \t");
    value = vb == std::string::npos ? "" : value.substr(vb);
    try {
      apply_setting(base, key, value);
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("settings line " + std::to_string(line_no) +
                                  ": " + err.what());
    }
  }
  return base;
}

SolverSettings load_settings(const std::string& path, SolverSettings base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open settings file: " + path);
  return parse_settings(in, base);
}

void write_settings(const SolverSettings& s, std::ostream& out) {
  out.precision(17);  // values must parse back to the same doubles
  const auto& b = s.brkga;
  out << "population_size=" << b.population_size << "\n";
  out << "elite_pct=" << b.elite_pct << "\n";
  out << "mutant_pct=" << b.mutant_pct << "\n";
  out << "total_parents=" << b.total_parents << "\n";
  out << "elite_parents=" << b.elite_parents << "\n";
  out << "bias=" << to_string(b.bias) << "\n";
  out << "num_islands=" << b.num_islands << "\n";
  out << "immigrants=" << b.immigrants << "\n";
  out << "exchange_interval=" << b.exchange_interval << "\n";
  out << "classic_rho_e=";
  if (b.classic_rho_e) out << *b.classic_rho_e;
  out << "\n";
  out << "seed=" << b.seed << "\n";
  out << "stall_limit=";
  if (b.stall_limit) out << *b.stall_limit;
  out << "\n";
  out << "max_generations=";
  if (b.max_generations) out << *b.max_generations;
  out << "\n";
  out << "max_seconds=";
  if (b.max_seconds) out << *b.max_seconds;
  out << "\n";
  out << "ipr_enabled=" << (s.ipr_enabled ? "1" : "0") << "\n";
  out << "ipr_pairs=" << s.ipr.pairs << "\n";
  out << "ipr_selection="
      << (s.ipr.selection == IprConfig::Selection::best ? "best" : "random")
      << "\n";
  out << "ipr_path_pct=" << s.ipr.path_pct << "\n";
  out << "ipr_frequency=" << s.ipr.frequency << "\n";
  out << "ipr_min_distance=" << s.ipr.min_distance << "\n";
  out << "decoder_mode="
      << (s.decoder.mode == DecoderMode::simple ? "sd" : "fd") << "\n";
  out << "tie_tolerance=" << s.decoder.tie_tolerance << "\n";
  out << "lambda1=" << s.weights.dist << "\n";
  out << "lambda2=" << s.weights.tard << "\n";
  out << "lambda3=" << s.weights.tmax << "\n";
  out << "workers=" << s.workers << "\n";
}

}  // namespace hhcrsp
