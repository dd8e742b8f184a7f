#include <fstream>

#include "doctest.h"
#include "hhcrsp/brkga.hpp"
#include "hhcrsp/oracle.hpp"
#include "support.hpp"

using namespace hhcrsp;

namespace {

Instance load_data(const std::string& name) {
  std::ifstream in(std::string(HHCRSP_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  return parse_instance(in);
}

}  // namespace

TEST_CASE("synthetic chromosomes reproduce order, flags, and toggles") {
  const Instance inst = test::build_instance(
      {{10, 0, 0, 120, {{1, 5}}},
       {20, 0, 0, 120, {{1, 5}}},
       {30, 0, 0, 120, {{1, 5}}}},
      {{1}});
  const std::vector<int> order = {3, 1, 2};
  const Chromosome ch = synthetic_chromosome(order, 1, true, false, 3);
  CHECK(sort_tasks(ch, inst) == order);
  CHECK(ch.keys[2] < 0.5);   // rank 0 -> tie flag off
  CHECK(ch.keys[0] >= 0.5);  // rank 1 -> tie flag on
  CHECK(ch.keys[1] >= 0.5);
  CHECK(ch.keys[3] >= 0.5);  // convex hull on
  CHECK(ch.keys[4] < 0.5);   // balancing off
}

TEST_CASE("one patient, one caregiver: unique solution, four decodes") {
  const Instance inst = test::build_instance(
      {{10, 0, 5, 120, {{1, 10}}}}, {{1}});
  const OracleResult full = best_decoder_reachable(inst, DecoderConfig{});
  CHECK(full.space_size == 4);  // one order, toggles only
  REQUIRE(full.best_solution.routes.size() == 1);
  CHECK(full.best_solution.routes[0].visits.size() == 1);
  CHECK(full.best_cost.objective ==
        evaluate(full.best_solution, inst).objective);

  const OracleResult route = best_routing(inst);
  CHECK(route.space_size == 1);
  CHECK(route.best_cost.objective == full.best_cost.objective);

  DecoderConfig sd;
  sd.mode = DecoderMode::simple;
  const OracleResult simple = best_decoder_reachable(inst, sd);
  CHECK(simple.space_size == 1);
  CHECK(simple.best_cost.objective == full.best_cost.objective);
}

TEST_CASE("size guards reject large instances") {
  const Instance big = test::random_small_instance(1);  // subset A or larger
  CHECK_THROWS_AS(best_decoder_reachable(big, DecoderConfig{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(best_routing(big), std::invalid_argument);
}

TEST_CASE("oracle chain holds on random tiny instances") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Instance inst =
        test::random_tiny_instance(seed, seed % 2 ? 1 : 0, seed % 3 ? 1 : 0);
    const OracleResult dec = best_decoder_reachable(inst, DecoderConfig{});
    const OracleResult route = best_routing(inst);
    CHECK(route.best_cost.objective <= dec.best_cost.objective + 1e-9);
    CHECK(validate(dec.best_solution, inst).empty());
    CHECK(validate(route.best_solution, inst).empty());

    Rng rng(seed + 1000);
    for (int trial = 0; trial < 20; ++trial) {
      const Chromosome ch = test::random_chromosome(inst.num_patients(), rng);
      const double f = decode(ch, inst).cost.objective;
      CHECK(dec.best_cost.objective <= f + 1e-9);
    }
  }
}

TEST_CASE("append-only construction can miss the routing optimum") {
  // a late-window patient sits between two early ones; every greedy order
  // misassigns someone, so exhaustive routing wins strictly
  const Instance inst = load_data("gap3.hhcrsp");
  const OracleResult dec = best_decoder_reachable(inst, DecoderConfig{});
  const OracleResult route = best_routing(inst);
  CHECK(route.best_cost.objective < dec.best_cost.objective - 1e-6);
}

TEST_CASE("full-mode search dominates simple-mode search under ties") {
  // two interchangeable caregivers force equal-cost candidates
  const Instance inst = test::build_instance(
      {{10, 0, 0, 30, {{1, 10}}},
       {10, 1, 0, 30, {{1, 10}}},
       {12, 0, 0, 40, {{1, 10}}}},
      {{1}, {1}});
  DecoderConfig fd;
  DecoderConfig sd;
  sd.mode = DecoderMode::simple;
  const OracleResult full = best_decoder_reachable(inst, fd);
  const OracleResult simple = best_decoder_reachable(inst, sd);
  CHECK(full.best_cost.objective <= simple.best_cost.objective + 1e-12);
  CHECK(full.space_size > simple.space_size);
}

TEST_CASE("simple-mode search bounds simple-mode evolution") {
  for (std::uint64_t seed = 31; seed <= 36; ++seed) {
    const Instance inst =
        test::random_tiny_instance(seed, seed % 2 ? 1 : 0, 1);
    DecoderConfig sd;
    sd.mode = DecoderMode::simple;
    const OracleResult oracle = best_decoder_reachable(inst, sd);

    BrkgaConfig cfg;
    cfg.population_size = 60;
    cfg.elite_pct = 0.25;
    cfg.mutant_pct = 0.2;
    cfg.total_parents = 3;
    cfg.elite_parents = 2;
    cfg.num_islands = 1;
    cfg.immigrants = 2;
    cfg.seed = seed;
    cfg.stall_limit = 30;
    const RunReport r = run(inst, cfg, sd, std::nullopt);
    CHECK(r.best_fitness >= oracle.best_cost.objective - 1e-9);
    // the reachable space is tiny, so the search should exhaust it
    CHECK(r.best_fitness == doctest::Approx(oracle.best_cost.objective));
  }
}

TEST_CASE("routing oracle lower-bounds every decode on the gap instance") {
  const Instance inst = load_data("gap3.hhcrsp");
  const OracleResult route = best_routing(inst);
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const Chromosome ch = test::random_chromosome(inst.num_patients(), rng);
    CHECK(route.best_cost.objective <=
          decode(ch, inst).cost.objective + 1e-9);
  }
}
