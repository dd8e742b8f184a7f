#include "hhcrsp/brkga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "hhcrsp/parallel.hpp"

namespace hhcrsp {

BiasFunction bias_from_string(const std::string& name) {
  if (name == "constant") return BiasFunction::constant;
  if (name == "linear") return BiasFunction::linear;
  if (name == "loginverse") return BiasFunction::loginverse;
  if (name == "exponential") return BiasFunction::exponential;
  if (name == "quadratic") return BiasFunction::quadratic;
  if (name == "cubic") return BiasFunction::cubic;
  throw std::invalid_argument("unknown bias function '" + name + "'");
}

std::string to_string(BiasFunction fn) {
  switch (fn) {
    case BiasFunction::constant: return "constant";
    case BiasFunction::linear: return "linear";
    case BiasFunction::loginverse: return "loginverse";
    case BiasFunction::exponential: return "exponential";
    case BiasFunction::quadratic: return "quadratic";
    case BiasFunction::cubic: return "cubic";
  }
  return "?";
}

void BrkgaConfig::check() const {
  const int p = population_size;
  const int pe = num_elite();
  const int pm = num_mutants();
  if (p < 2) throw std::invalid_argument("population_size must be >= 2");
  if (pe < 1 || pe >= p)
    throw std::invalid_argument("elite share must satisfy 1 <= p_e < p");
  if (pe + pm > p)
    throw std::invalid_argument("elite + mutant shares exceed the population");
  if (elite_parents < 1 || elite_parents >= total_parents ||
      total_parents > p)
    throw std::invalid_argument(
        "parents must satisfy 1 <= elite_parents < total_parents <= p");
  if (elite_parents > pe)
    throw std::invalid_argument("elite_parents cannot exceed the elite size");
  if (total_parents - elite_parents > p - pe)
    throw std::invalid_argument("not enough non-elite members to mate");
  if (num_islands < 1) throw std::invalid_argument("num_islands must be >= 1");
  if (immigrants < 0) throw std::invalid_argument("immigrants must be >= 0");
  if (immigrants * num_islands > p)
    throw std::invalid_argument("immigrants * islands must not exceed p");
  if (exchange_interval < 1)
    throw std::invalid_argument("exchange_interval must be >= 1");
  if (classic_rho_e) {
    if (!(*classic_rho_e >= 0.5 && *classic_rho_e < 1.0))
      throw std::invalid_argument("classic rho_e must lie in [0.5, 1)");
    if (total_parents != 2 || elite_parents != 1)
      throw std::invalid_argument(
          "classic rho_e requires total_parents=2, elite_parents=1");
  }
  if (stall_limit && *stall_limit < 1)
    throw std::invalid_argument("stall_limit must be >= 1");
  if (max_generations && *max_generations < 0)
    throw std::invalid_argument("max_generations must be >= 0");
  if (max_seconds && *max_seconds <= 0)
    throw std::invalid_argument("max_seconds must be > 0");
}

double bias_weight(BiasFunction fn, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  const double r = rank;
  switch (fn) {
    case BiasFunction::constant: return 1.0;
    case BiasFunction::linear: return 1.0 / r;
    case BiasFunction::loginverse: return 1.0 / std::log2(r + 1.0);
    case BiasFunction::exponential: return std::exp(-r);
    case BiasFunction::quadratic: return 1.0 / (r * r);
    case BiasFunction::cubic: return 1.0 / (r * r * r);
  }
  throw std::invalid_argument("unknown bias function");
}

Chromosome mate(std::vector<Parent> parents, const BrkgaConfig& cfg,
                Rng& rng) {
  if (parents.empty()) throw std::invalid_argument("mate needs parents");
  std::stable_sort(parents.begin(), parents.end(),
                   [](const Parent& a, const Parent& b) {
                     return a.fitness < b.fitness;
                   });
  const std::size_t len = parents.front().chromosome->keys.size();

  Chromosome child;
  child.keys.resize(len);

  if (cfg.classic_rho_e) {
    std::size_t elite_idx = 0;
    for (std::size_t i = 0; i < parents.size(); ++i)
      if (parents[i].elite) elite_idx = i;
    const std::size_t other_idx = elite_idx == 0 ? 1 : 0;
    for (std::size_t j = 0; j < len; ++j) {
      const bool from_elite = rng.next_real() < *cfg.classic_rho_e;
      child.keys[j] =
          parents[from_elite ? elite_idx : other_idx].chromosome->keys[j];
    }
    return child;
  }

  std::vector<double> cumulative(parents.size());
  double total = 0;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    total += bias_weight(cfg.bias, static_cast<int>(i) + 1);
    cumulative[i] = total;
  }
  for (std::size_t j = 0; j < len; ++j) {
    const double u = rng.next_real() * total;
    std::size_t pick = 0;
    while (pick + 1 < parents.size() && cumulative[pick] < u) ++pick;
    child.keys[j] = parents[pick].chromosome->keys[j];
  }
  return child;
}

namespace {

Chromosome random_chromosome(std::size_t len, Rng& rng) {
  Chromosome ch;
  ch.keys.resize(len);
  for (double& k : ch.keys) k = rng.next_real();
  return ch;
}

void decode_members(std::vector<Individual*>& fresh, const Instance& inst,
                    const DecoderConfig& dcfg, const Weights& w, int workers) {
  parallel_for(fresh.size(), workers, [&](std::size_t i) {
    fresh[i]->fitness =
        decode(fresh[i]->chromosome, inst, dcfg, w).cost.objective;
  });
}

}  // namespace

Population evolve_generation(const Population& pop, const Instance& inst,
                             const DecoderConfig& dcfg, const Weights& w,
                             const BrkgaConfig& cfg, Rng& rng, int workers) {
  Population cur = pop;
  if (!cur.sorted) cur.sort();
  const int p = cfg.population_size;
  if (static_cast<int>(cur.size()) != p)
    throw std::invalid_argument("population size does not match the config");
  const int pe = cfg.num_elite();
  const int pm = cfg.num_mutants();
  const int offspring = p - pe - pm;

  Population next;
  next.members.reserve(static_cast<std::size_t>(p));
  for (int i = 0; i < pe; ++i) next.members.push_back(cur.members[i]);

  // All stochastic choices happen here, on the caller's thread, in a fixed
  // order; only the decoding below runs in parallel.
  std::vector<Individual*> fresh;
  const std::size_t len = cur.members.front().chromosome.keys.size();
  for (int i = 0; i < pm; ++i) {
    Individual ind;
    ind.chromosome = random_chromosome(len, rng);
    next.members.push_back(std::move(ind));
  }
  for (int i = 0; i < offspring; ++i) {
    std::vector<Parent> parents;
    parents.reserve(static_cast<std::size_t>(cfg.total_parents));
    for (std::size_t idx : rng.sample_distinct(
             static_cast<std::size_t>(cfg.elite_parents),
             static_cast<std::size_t>(pe)))
      parents.push_back({&cur.members[idx].chromosome,
                         cur.members[idx].fitness, true});
    for (std::size_t idx : rng.sample_distinct(
             static_cast<std::size_t>(cfg.total_parents - cfg.elite_parents),
             static_cast<std::size_t>(p - pe)))
      parents.push_back({&cur.members[static_cast<std::size_t>(pe) + idx]
                              .chromosome,
                         cur.members[static_cast<std::size_t>(pe) + idx]
                             .fitness,
                         false});
    Individual ind;
    ind.chromosome = mate(std::move(parents), cfg, rng);
    next.members.push_back(std::move(ind));
  }

  for (std::size_t i = static_cast<std::size_t>(pe); i < next.members.size();
       ++i)
    fresh.push_back(&next.members[i]);
  decode_members(fresh, inst, dcfg, w, workers);
  next.sort();
  return next;
}

namespace {

struct StatsAccumulator {
  double best = 0, mean = 0, stddev = 0, elite_diversity = 0;
};

StatsAccumulator collect_stats(const std::vector<Population>& islands,
                               int num_elite) {
  StatsAccumulator s;
  double sum = 0, sum_sq = 0;
  long n = 0;
  double elite_sum = 0, elite_sq = 0;
  long elite_n = 0;
  s.best = islands.front().best().fitness;
  for (const Population& pop : islands) {
    s.best = std::min(s.best, pop.best().fitness);
    for (std::size_t i = 0; i < pop.size(); ++i) {
      const double f = pop.members[i].fitness;
      sum += f;
      sum_sq += f * f;
      ++n;
      if (static_cast<int>(i) < num_elite) {
        elite_sum += f;
        elite_sq += f * f;
        ++elite_n;
      }
    }
  }
  s.mean = sum / static_cast<double>(n);
  const double var =
      std::max(0.0, sum_sq / static_cast<double>(n) - s.mean * s.mean);
  s.stddev = std::sqrt(var);
  if (elite_n > 0) {
    const double emean = elite_sum / static_cast<double>(elite_n);
    s.elite_diversity = std::sqrt(std::max(
        0.0, elite_sq / static_cast<double>(elite_n) - emean * emean));
  }
  return s;
}

}  // namespace

RunReport run(const Instance& inst, const BrkgaConfig& cfg,
              const DecoderConfig& dcfg,
              const std::optional<IprConfig>& ipr_cfg, const Weights& w,
              int workers) {
  cfg.check();
  if (ipr_cfg) ipr_cfg->check();
  const auto t0 = std::chrono::steady_clock::now();

  RunReport report;
  report.instance_name = inst.name;
  report.seed = cfg.seed;
  report.config = cfg;
  report.ipr = ipr_cfg;
  report.decoder = dcfg;
  report.weights = w;
  report.workers = workers;
  report.stall_limit_used =
      cfg.stall_limit
          ? *cfg.stall_limit
          : std::max(1, (inst.num_patients() + 1) / 2);  // ceil(|C| / 2)

  const std::size_t len = static_cast<std::size_t>(inst.num_patients()) + 2;
  const int k = cfg.num_islands;
  Rng rng(cfg.seed);

  std::vector<Population> islands(static_cast<std::size_t>(k));
  std::vector<Individual*> fresh;
  for (Population& pop : islands) {
    pop.members.resize(static_cast<std::size_t>(cfg.population_size));
    for (Individual& ind : pop.members)
      ind.chromosome = random_chromosome(len, rng);
  }
  for (Population& pop : islands)
    for (Individual& ind : pop.members) fresh.push_back(&ind);
  decode_members(fresh, inst, dcfg, w, workers);
  for (Population& pop : islands) pop.sort();

  double best_fitness = islands.front().best().fitness;
  Chromosome best_chromosome = islands.front().best().chromosome;
  for (const Population& pop : islands) {
    if (pop.best().fitness < best_fitness) {
      best_fitness = pop.best().fitness;
      best_chromosome = pop.best().chromosome;
    }
  }

  auto record_stats = [&](long gen) {
    const StatsAccumulator s = collect_stats(islands, cfg.num_elite());
    GenerationStats gs;
    gs.generation = gen;
    gs.best = best_fitness;
    gs.mean = s.mean;
    gs.stddev = s.stddev;
    gs.elite_diversity = s.elite_diversity;
    report.generations.push_back(gs);
  };
  record_stats(0);

  long gen = 0;
  long stall = 0;
  std::string stop_reason;
  while (true) {
    if (stall >= report.stall_limit_used) {
      stop_reason = "stall";
      break;
    }
    if (cfg.max_generations && gen >= *cfg.max_generations) {
      stop_reason = "max_generations";
      break;
    }
    if (cfg.max_seconds) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - t0;
      if (elapsed.count() >= *cfg.max_seconds) {
        stop_reason = "max_seconds";
        break;
      }
    }

    ++gen;
    for (Population& pop : islands)
      pop = evolve_generation(pop, inst, dcfg, w, cfg, rng, workers);

    if (k > 1 && cfg.immigrants > 0 && gen % cfg.exchange_interval == 0) {
      // ring exchange of elite copies, all sends taken from the
      // pre-exchange snapshot
      std::vector<std::vector<Individual>> outbox(
          static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        outbox[i].assign(islands[i].members.begin(),
                         islands[i].members.begin() + cfg.immigrants);
      for (int i = 0; i < k; ++i) {
        const int dst = (i + 1) % k;
        Population& pop = islands[dst];
        for (int m = 0; m < cfg.immigrants; ++m)
          pop.members[pop.size() - 1 - static_cast<std::size_t>(m)] =
              outbox[i][static_cast<std::size_t>(m)];
        pop.sort();
        ImmigrationEvent ev;
        ev.generation = gen;
        ev.from_island = i;
        ev.to_island = dst;
        ev.count = cfg.immigrants;
        report.immigrations.push_back(ev);
      }
    }

    if (ipr_cfg && gen % ipr_cfg->frequency == 0) {
      auto events =
          apply_ipr(islands, *ipr_cfg, cfg.num_elite(),
                    std::max(1, cfg.num_mutants()), inst, dcfg, w, rng,
                    workers);
      for (IprEvent& ev : events) {
        ev.generation = gen;
        report.ipr_events.push_back(ev);
      }
    }

    bool improved = false;
    for (const Population& pop : islands) {
      if (pop.best().fitness < best_fitness) {
        best_fitness = pop.best().fitness;
        best_chromosome = pop.best().chromosome;
        improved = true;
      }
    }
    stall = improved ? 0 : stall + 1;
    record_stats(gen);
  }

  report.generations_evolved = gen;
  report.generations_since_improvement = stall;
  report.stop_reason = stop_reason;
  report.best_fitness = best_fitness;
  report.best_chromosome = best_chromosome;
  report.best_solution = decode(best_chromosome, inst, dcfg, w);
  if (report.best_solution.cost.objective != best_fitness)
    throw std::logic_error("best fitness does not reproduce on re-decode");
  if (!validate(report.best_solution, inst).empty())
    throw std::logic_error("best solution failed validation");

  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - t0;
  report.wall_seconds = elapsed.count();
  return report;
}

}  // namespace hhcrsp
