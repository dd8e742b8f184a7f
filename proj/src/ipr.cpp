#include "hhcrsp/ipr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hhcrsp/parallel.hpp"

namespace hhcrsp {

void IprConfig::check() const {
  if (pairs < 1) throw std::invalid_argument("ipr pairs must be >= 1");
  if (!(path_pct > 0 && path_pct <= 1))
    throw std::invalid_argument("ipr path_pct must lie in (0, 1]");
  if (frequency < 1) throw std::invalid_argument("ipr frequency must be >= 1");
  if (min_distance < 0)
    throw std::invalid_argument("ipr min_distance must be >= 0");
}

std::vector<int> key_permutation(std::span<const double> keys) {
  std::vector<int> perm(keys.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  return perm;
}

namespace {

// merge-sort inversion count of `seq`
long count_inversions(std::vector<int>& seq, std::vector<int>& scratch,
                      std::size_t lo, std::size_t hi) {
  if (hi - lo <= 1) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long inv = count_inversions(seq, scratch, lo, mid) +
             count_inversions(seq, scratch, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (seq[a] <= seq[b]) {
      scratch[out++] = seq[a++];
    } else {
      inv += static_cast<long>(mid - a);
      scratch[out++] = seq[b++];
    }
  }
  while (a < mid) scratch[out++] = seq[a++];
  while (b < hi) scratch[out++] = seq[b++];
  std::copy(scratch.begin() + static_cast<long>(lo),
            scratch.begin() + static_cast<long>(hi),
            seq.begin() + static_cast<long>(lo));
  return inv;
}

}  // namespace

long kendall_tau(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("kendall_tau: length mismatch");
  const std::size_t n = a.size();
  std::vector<int> pos_b(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = b[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || pos_b[v] != -1)
      throw std::invalid_argument("kendall_tau: not a permutation");
    pos_b[v] = static_cast<int>(i);
  }
  std::vector<int> seq(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = a[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
      throw std::invalid_argument("kendall_tau: not a permutation");
    seen[v] = true;
    seq[i] = pos_b[v];
  }
  std::vector<int> scratch(n);
  return count_inversions(seq, scratch, 0, n);
}

std::optional<RelinkResult> relink(const Chromosome& base,
                                   const Chromosome& guide,
                                   const Instance& inst,
                                   const DecoderConfig& dcfg, const Weights& w,
                                   const IprConfig& cfg,
                                   std::optional<double> base_fitness,
                                   std::optional<double> guide_fitness,
                                   int workers, RelinkStats* stats) {
  const std::size_t nc = static_cast<std::size_t>(inst.num_patients());
  if (base.keys.size() != nc + 2 || guide.keys.size() != nc + 2)
    throw std::invalid_argument("chromosome length must be |C|+2");
  if (nc == 0) return std::nullopt;

  const std::vector<int> perm_base =
      key_permutation({base.keys.data(), nc});
  const std::vector<int> perm_guide =
      key_permutation({guide.keys.data(), nc});
  const long distance = kendall_tau(perm_base, perm_guide);
  if (stats) stats->distance = distance;
  if (static_cast<double>(distance) <= cfg.min_distance) {
    if (stats) stats->gated = true;
    return std::nullopt;
  }

  const double fit_base =
      base_fitness ? *base_fitness : decode(base, inst, dcfg, w).cost.objective;
  const double fit_guide = guide_fitness
                               ? *guide_fitness
                               : decode(guide, inst, dcfg, w).cost.objective;
  const double target = std::min(fit_base, fit_guide);

  // Two working copies walk toward each other, one step per side in turn.
  // Intermediates keep the base's toggle keys: only the first |C| positions
  // carry permutation meaning.
  Chromosome work_b = base;
  Chromosome work_g = guide;
  work_g.keys[nc] = base.keys[nc];
  work_g.keys[nc + 1] = base.keys[nc + 1];

  const int total_steps =
      static_cast<int>(std::ceil(cfg.path_pct * static_cast<double>(nc)));
  std::vector<Chromosome> intermediates;
  intermediates.reserve(static_cast<std::size_t>(total_steps));

  std::size_t jb = 0, jg = 0;
  for (int step = 0; step < total_steps; ++step) {
    bool base_turn = step % 2 == 0;
    if (base_turn && jb >= nc) base_turn = false;
    if (!base_turn && jg >= nc) {
      if (jb >= nc) break;
      base_turn = true;
    }

    Chromosome& work = base_turn ? work_b : work_g;
    const std::vector<int>& target_perm = base_turn ? perm_guide : perm_base;
    std::size_t& j = base_turn ? jb : jg;

    const std::vector<int> cur = key_permutation({work.keys.data(), nc});
    const int want = target_perm[j];
    const int have = cur[j];
    ++j;
    if (want == have) continue;  // already in place, nothing to decode
    std::swap(work.keys[static_cast<std::size_t>(want)],
              work.keys[static_cast<std::size_t>(have)]);
    intermediates.push_back(work);
  }

  if (stats) stats->steps = static_cast<int>(intermediates.size());
  if (intermediates.empty()) return std::nullopt;
  std::vector<double> fitness(intermediates.size());
  parallel_for(intermediates.size(), workers, [&](std::size_t i) {
    fitness[i] = decode(intermediates[i], inst, dcfg, w).cost.objective;
  });

  std::optional<RelinkResult> best;
  for (std::size_t i = 0; i < intermediates.size(); ++i) {
    if (fitness[i] < target && (!best || fitness[i] < best->fitness)) {
      best = RelinkResult{intermediates[i], fitness[i], static_cast<int>(i)};
    }
  }
  return best;
}

std::vector<IprEvent> apply_ipr(std::vector<Population>& islands,
                                const IprConfig& cfg, int num_elite,
                                int max_injections, const Instance& inst,
                                const DecoderConfig& dcfg, const Weights& w,
                                Rng& rng, int workers) {
  cfg.check();
  std::vector<IprEvent> events;
  const int k = static_cast<int>(islands.size());
  if (k == 0) return events;
  int injections = 0;

  for (int a = 0; a < k; ++a) {
    const int b = (a + 1) % k;
    Population& from = islands[a];
    Population& to = islands[b];
    const int elite_a =
        std::min(num_elite, static_cast<int>(from.size()));
    const int elite_b = std::min(num_elite, static_cast<int>(to.size()));
    if (elite_a < 1 || elite_b < 1) continue;
    const bool same = a == b;
    if (same && elite_a < 2) continue;

    for (int t = 0; t < cfg.pairs; ++t) {
      std::size_t bi, gi;
      if (cfg.selection == IprConfig::Selection::best) {
        bi = static_cast<std::size_t>(t % elite_a);
        gi = static_cast<std::size_t>(same ? (t + 1) % elite_b : t % elite_b);
        if (same && bi == gi) continue;
      } else {
        bi = rng.next_index(static_cast<std::size_t>(elite_a));
        gi = rng.next_index(static_cast<std::size_t>(elite_b));
        while (same && gi == bi)
          gi = rng.next_index(static_cast<std::size_t>(elite_b));
      }
      const Individual& base = from.members[bi];
      const Individual& guide = to.members[gi];

      RelinkStats stats;
      auto result = relink(base.chromosome, guide.chromosome, inst, dcfg, w,
                           cfg, base.fitness, guide.fitness, workers, &stats);
      IprEvent ev;
      ev.from_island = a;
      ev.to_island = b;
      ev.distance = stats.distance;
      ev.steps = stats.steps;
      if (result) {
        ev.improved = true;
        ev.new_fitness = result->fitness;
        if (injections < max_injections) {
          Individual& worst = to.members.back();
          worst.chromosome = result->chromosome;
          worst.fitness = result->fitness;
          to.sort();
          ++injections;
        }
      }
      events.push_back(ev);
    }
  }
  return events;
}

}  // namespace hhcrsp
