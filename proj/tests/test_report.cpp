#include <sstream>

#include "doctest.h"
#include "hhcrsp/report.hpp"
#include "support.hpp"

using namespace hhcrsp;

TEST_CASE("run reports round-trip through JSON exactly") {
  const Instance inst = test::random_tiny_instance(21, 1, 1);
  BrkgaConfig cfg;
  cfg.population_size = 24;
  cfg.elite_pct = 0.25;
  cfg.mutant_pct = 0.2;
  cfg.total_parents = 3;
  cfg.elite_parents = 2;
  cfg.immigrants = 2;
  cfg.exchange_interval = 3;
  cfg.seed = 13;
  cfg.stall_limit = 5;
  IprConfig ipr;
  ipr.pairs = 3;
  ipr.frequency = 2;
  ipr.path_pct = 0.6;
  RunReport report = run(inst, cfg, DecoderConfig{}, ipr);
  report.instance_path = "somewhere/tiny.hhcrsp";

  std::ostringstream out;
  write_report_json(report, out);
  std::istringstream in(out.str());
  const RunReport back = read_report_json(in, inst);

  CHECK(back.instance_name == report.instance_name);
  CHECK(back.instance_path == report.instance_path);
  CHECK(back.seed == report.seed);
  CHECK(back.best_fitness == report.best_fitness);
  CHECK(back.best_chromosome.keys == report.best_chromosome.keys);
  CHECK(back.generations_evolved == report.generations_evolved);
  CHECK(back.stall_limit_used == report.stall_limit_used);
  CHECK(back.stop_reason == report.stop_reason);
  CHECK(back.config.population_size == cfg.population_size);
  CHECK(back.config.seed == cfg.seed);
  REQUIRE(back.ipr.has_value());
  CHECK(back.ipr->pairs == ipr.pairs);
  CHECK(back.generations.size() == report.generations.size());
  for (std::size_t g = 0; g < back.generations.size(); ++g) {
    CHECK(back.generations[g].best == report.generations[g].best);
    CHECK(back.generations[g].mean == report.generations[g].mean);
  }
  CHECK(back.immigrations.size() == report.immigrations.size());
  CHECK(back.ipr_events.size() == report.ipr_events.size());

  // stored solution re-evaluates to the stored cost, bit for bit
  const CostComponents fresh = evaluate(back.best_solution, inst);
  CHECK(fresh.objective == back.best_fitness);
  CHECK(fresh.dist == back.best_solution.cost.dist);
  CHECK(fresh.tard == back.best_solution.cost.tard);
  CHECK(fresh.tmax == back.best_solution.cost.tmax);
}

TEST_CASE("flat CSV row carries the run summary") {
  const Instance inst = test::random_tiny_instance(22, 0, 1);
  BrkgaConfig cfg;
  cfg.population_size = 16;
  cfg.elite_pct = 0.25;
  cfg.mutant_pct = 0.25;
  cfg.total_parents = 2;
  cfg.elite_parents = 1;
  cfg.num_islands = 1;
  cfg.immigrants = 1;
  cfg.seed = 4;
  cfg.stall_limit = 3;
  const RunReport report = run(inst, cfg, DecoderConfig{}, std::nullopt);

  CHECK(run_csv_header() == "instance,seed,best,avg,generations,seconds");
  const std::string row = run_csv_row(report);
  std::istringstream iss(row);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(iss, field, ',')) fields.push_back(field);
  REQUIRE(fields.size() == 6);
  CHECK(fields[0] == inst.name);
  CHECK(fields[1] == "4");
  CHECK(std::stod(fields[2]) == report.best_fitness);
  CHECK(std::stol(fields[4]) == report.generations_evolved);
}
