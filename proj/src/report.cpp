#include "hhcrsp/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hhcrsp {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json config_to_json(const BrkgaConfig& cfg) {
  json j;
  j["population_size"] = cfg.population_size;
  j["elite_pct"] = cfg.elite_pct;
  j["mutant_pct"] = cfg.mutant_pct;
  j["total_parents"] = cfg.total_parents;
  j["elite_parents"] = cfg.elite_parents;
  j["bias"] = to_string(cfg.bias);
  j["num_islands"] = cfg.num_islands;
  j["immigrants"] = cfg.immigrants;
  j["exchange_interval"] = cfg.exchange_interval;
  if (cfg.classic_rho_e) j["classic_rho_e"] = *cfg.classic_rho_e;
  j["seed"] = cfg.seed;
  if (cfg.stall_limit) j["stall_limit"] = *cfg.stall_limit;
  if (cfg.max_generations) j["max_generations"] = *cfg.max_generations;
  if (cfg.max_seconds) j["max_seconds"] = *cfg.max_seconds;
  return j;
}

BrkgaConfig config_from_json(const json& j) {
  BrkgaConfig cfg;
  cfg.population_size = j.at("population_size").get<int>();
  cfg.elite_pct = j.at("elite_pct").get<double>();
  cfg.mutant_pct = j.at("mutant_pct").get<double>();
  cfg.total_parents = j.at("total_parents").get<int>();
  cfg.elite_parents = j.at("elite_parents").get<int>();
  cfg.bias = bias_from_string(j.at("bias").get<std::string>());
  cfg.num_islands = j.at("num_islands").get<int>();
  cfg.immigrants = j.at("immigrants").get<int>();
  cfg.exchange_interval = j.at("exchange_interval").get<int>();
  if (j.contains("classic_rho_e"))
    cfg.classic_rho_e = j.at("classic_rho_e").get<double>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("stall_limit"))
    cfg.stall_limit = j.at("stall_limit").get<int>();
  if (j.contains("max_generations"))
    cfg.max_generations = j.at("max_generations").get<long>();
  if (j.contains("max_seconds"))
    cfg.max_seconds = j.at("max_seconds").get<double>();
  return cfg;
}

}  // namespace

void write_report_json(const RunReport& report, std::ostream& out) {
  json j;
  j["instance"] = report.instance_name;
  j["instance_path"] = report.instance_path;
  j["seed"] = report.seed;
  j["config"] = config_to_json(report.config);
  if (report.ipr) {
    json ji;
    ji["pairs"] = report.ipr->pairs;
    ji["selection"] =
        report.ipr->selection == IprConfig::Selection::best ? "best"
                                                            : "random";
    ji["path_pct"] = report.ipr->path_pct;
    ji["frequency"] = report.ipr->frequency;
    ji["min_distance"] = report.ipr->min_distance;
    j["ipr"] = ji;
  }
  j["decoder_mode"] =
      report.decoder.mode == DecoderMode::simple ? "sd" : "fd";
  j["tie_tolerance"] = report.decoder.tie_tolerance;
  j["weights"] = {report.weights.dist, report.weights.tard,
                  report.weights.tmax};
  j["workers"] = report.workers;
  j["best"] = {{"objective", report.best_fitness},
               {"dist", report.best_solution.cost.dist},
               {"tard", report.best_solution.cost.tard},
               {"tmax", report.best_solution.cost.tmax}};
  j["best_chromosome"] = report.best_chromosome.keys;
  j["best_solution"] = serialize_solution(report.best_solution);
  j["generations_evolved"] = report.generations_evolved;
  j["stall_limit"] = report.stall_limit_used;
  j["generations_since_improvement"] = report.generations_since_improvement;
  j["stop_reason"] = report.stop_reason;
  j["wall_seconds"] = report.wall_seconds;

  json gens = json::array();
  for (const GenerationStats& g : report.generations) {
    gens.push_back({{"gen", g.generation},
                    {"best", g.best},
                    {"mean", g.mean},
                    {"stddev", g.stddev},
                    {"elite_diversity", g.elite_diversity}});
  }
  j["per_generation"] = gens;

  json imm = json::array();
  for (const ImmigrationEvent& ev : report.immigrations)
    imm.push_back({{"gen", ev.generation},
                   {"from", ev.from_island},
                   {"to", ev.to_island},
                   {"count", ev.count}});
  j["immigrations"] = imm;

  json ipr_events = json::array();
  for (const IprEvent& ev : report.ipr_events)
    ipr_events.push_back({{"gen", ev.generation},
                          {"from", ev.from_island},
                          {"to", ev.to_island},
                          {"distance", ev.distance},
                          {"steps", ev.steps},
                          {"improved", ev.improved},
                          {"new_fitness", ev.new_fitness}});
  j["ipr_events"] = ipr_events;

  out << j.dump(2) << "\n";
}

RunReport read_report_json(std::istream& in, const Instance& inst) {
  json j;
  in >> j;
  RunReport report;
  report.instance_name = j.at("instance").get<std::string>();
  report.instance_path = j.at("instance_path").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  report.config = config_from_json(j.at("config"));
  if (j.contains("ipr")) {
    IprConfig ipr;
    ipr.pairs = j["ipr"].at("pairs").get<int>();
    ipr.selection = j["ipr"].at("selection").get<std::string>() == "best"
                        ? IprConfig::Selection::best
                        : IprConfig::Selection::random;
    ipr.path_pct = j["ipr"].at("path_pct").get<double>();
    ipr.frequency = j["ipr"].at("frequency").get<int>();
    ipr.min_distance = j["ipr"].at("min_distance").get<double>();
    report.ipr = ipr;
  }
  report.decoder.mode = j.at("decoder_mode").get<std::string>() == "sd"
                            ? DecoderMode::simple
                            : DecoderMode::full;
  report.decoder.tie_tolerance = j.at("tie_tolerance").get<double>();
  report.weights.dist = j.at("weights")[0].get<double>();
  report.weights.tard = j.at("weights")[1].get<double>();
  report.weights.tmax = j.at("weights")[2].get<double>();
  report.workers = j.at("workers").get<int>();
  report.best_fitness = j.at("best").at("objective").get<double>();
  report.best_chromosome.keys =
      j.at("best_chromosome").get<std::vector<double>>();
  {
    std::istringstream sol_in(j.at("best_solution").get<std::string>());
    report.best_solution = parse_solution(sol_in, inst);
  }
  report.generations_evolved = j.at("generations_evolved").get<long>();
  report.stall_limit_used = j.at("stall_limit").get<int>();
  report.generations_since_improvement =
      j.at("generations_since_improvement").get<long>();
  report.stop_reason = j.at("stop_reason").get<std::string>();
  report.wall_seconds = j.at("wall_seconds").get<double>();
  for (const json& g : j.at("per_generation")) {
    GenerationStats gs;
    gs.generation = g.at("gen").get<long>();
    gs.best = g.at("best").get<double>();
    gs.mean = g.at("mean").get<double>();
    gs.stddev = g.at("stddev").get<double>();
    gs.elite_diversity = g.at("elite_diversity").get<double>();
    report.generations.push_back(gs);
  }
  for (const json& e : j.at("immigrations")) {
    ImmigrationEvent ev;
    ev.generation = e.at("gen").get<long>();
    ev.from_island = e.at("from").get<int>();
    ev.to_island = e.at("to").get<int>();
    ev.count = e.at("count").get<int>();
    report.immigrations.push_back(ev);
  }
  for (const json& e : j.at("ipr_events")) {
    IprEvent ev;
    ev.generation = e.at("gen").get<long>();
    ev.from_island = e.at("from").get<int>();
    ev.to_island = e.at("to").get<int>();
    ev.distance = e.at("distance").get<long>();
    ev.steps = e.at("steps").get<int>();
    ev.improved = e.at("improved").get<bool>();
    ev.new_fitness = e.at("new_fitness").get<double>();
    report.ipr_events.push_back(ev);
  }
  return report;
}

std::string run_csv_header() {
  return "instance,seed,best,avg,generations,seconds";
}

std::string run_csv_row(const RunReport& report) {
  std::ostringstream oss;
  oss << report.instance_name << ',' << report.seed << ','
      << fmt_double(report.best_fitness) << ','
      << fmt_double(report.generations.back().mean) << ','
      << report.generations_evolved << ',' << report.wall_seconds;
  return oss.str();
}

}  // namespace hhcrsp
