#include "support.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhcrsp::test {

Instance build_instance(const std::vector<PatientSpec>& patients,
                        const std::vector<std::vector<int>>& skills,
                        int num_services, double horizon,
                        const std::vector<double>& matrix) {
  Instance inst;
  inst.name = "test";
  inst.num_services = num_services;
  inst.horizon = horizon;
  for (std::size_t i = 0; i < patients.size(); ++i) {
    const PatientSpec& spec = patients[i];
    Patient p;
    p.id = static_cast<int>(i) + 1;
    p.x = spec.x;
    p.y = spec.y;
    p.tw_start = spec.e;
    p.tw_end = spec.l;
    for (const auto& [svc, dur] : spec.demands)
      p.demands.push_back({svc, dur});
    std::sort(p.demands.begin(), p.demands.end(),
              [](const auto& a, const auto& b) { return a.service < b.service; });
    if (p.is_double()) {
      p.sep_min = spec.sep_min;
      p.sep_max = spec.sep_max;
    }
    inst.patients.push_back(std::move(p));
  }
  for (std::size_t v = 0; v < skills.size(); ++v) {
    Caregiver cg;
    cg.id = static_cast<int>(v) + 1;
    cg.skills = skills[v];
    std::sort(cg.skills.begin(), cg.skills.end());
    inst.caregivers.push_back(std::move(cg));
  }
  const std::size_t n = patients.size() + 1;
  if (!matrix.empty()) {
    if (matrix.size() != n * n)
      throw std::invalid_argument("matrix must be (|C|+1)^2 entries");
    inst.travel = TravelMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        inst.travel.at(static_cast<int>(i), static_cast<int>(j)) =
            matrix[i * n + j];
  } else {
    std::vector<std::pair<double, double>> points;
    points.emplace_back(0.0, 0.0);
    for (const PatientSpec& spec : patients)
      points.emplace_back(spec.x, spec.y);
    inst.travel = euclidean_travel(points);
  }
  inst.big_m = Instance::derive_big_m(inst);
  inst.check_invariants();
  return inst;
}

Chromosome random_chromosome(int num_patients, Rng& rng) {
  Chromosome ch;
  ch.keys.resize(static_cast<std::size_t>(num_patients) + 2);
  for (double& k : ch.keys) k = rng.next_real();
  return ch;
}

Instance random_tiny_instance(std::uint64_t seed, int num_sim, int num_prec) {
  Rng rng(seed);
  GenSpec spec;
  spec.seed = seed * 7919 + 13;
  spec.num_patients =
      std::max<int>(num_sim + num_prec, 2 + static_cast<int>(rng.next_int(0, 2)));
  spec.num_caregivers = 2 + static_cast<int>(rng.next_int(0, 1));
  spec.horizon = 180;
  spec.tw_width = 60;
  spec.force_simultaneous = num_sim;
  spec.force_precedence = num_prec;
  return generate_instance(spec);
}

Instance random_small_instance(std::uint64_t seed) {
  GenSpec spec = subset_spec(static_cast<char>('A' + seed % 3), seed);
  return generate_instance(spec);
}

MipRecount mip_recount(const Instance& inst) {
  const int nc = inst.num_patients();
  const int nv = inst.num_caregivers();
  const int ns = inst.num_services;
  auto demanded = [&](int i, int s) {
    return inst.patient(i).demands_service(s);
  };
  auto skilled = [&](int v, int s) { return inst.caregiver(v).has_skill(s); };

  MipRecount e;
  for (int i = 0; i <= nc; ++i)  // service arcs
    for (int j = 1; j <= nc; ++j)
      for (int v = 1; v <= nv; ++v)
        for (int s = 1; s <= ns; ++s)
          if (i != j && demanded(j, s) && skilled(v, s)) ++e.binary;
  for (int i = 1; i <= nc; ++i)  // return arcs
    for (int v = 1; v <= nv; ++v)
      for (int s = 1; s <= ns; ++s)
        if (demanded(i, s) && skilled(v, s)) ++e.binary;

  e.continuous = static_cast<long>(nc + 1) * nv * ns +
                 static_cast<long>(nc) * ns + 3;

  long rows = 2;                       // cost definitions
  rows += static_cast<long>(nc) * ns;  // largest-tardiness envelopes
  for (int v = 1; v <= nv; ++v) {      // depot balance + departure cap
    bool any = false;
    for (int j = 1; j <= nc; ++j)
      for (int s = 1; s <= ns; ++s) any |= demanded(j, s) && skilled(v, s);
    rows += any ? 2 : 0;
  }
  for (int i = 1; i <= nc; ++i)  // node flow
    for (int v = 1; v <= nv; ++v) {
      bool any = false;
      for (int s = 1; s <= ns; ++s) any |= demanded(i, s) && skilled(v, s);
      rows += any ? 1 : 0;
    }
  for (int i = 1; i <= nc; ++i)  // assignments
    rows += static_cast<long>(inst.patient(i).demands.size());
  for (int i = 0; i <= nc; ++i) {  // ordering chains
    for (int j = 1; j <= nc; ++j) {
      if (i == j) continue;
      for (int v = 1; v <= nv; ++v) {
        for (int s = 1; s <= ns; ++s) {
          if (!(demanded(j, s) && skilled(v, s))) continue;
          if (i == 0) {
            rows += 1;
          } else {
            for (int s1 = 1; s1 <= ns; ++s1)
              if (demanded(i, s1) && skilled(v, s1)) rows += 1;
          }
        }
      }
    }
  }
  rows += static_cast<long>(nc) * nv * ns;  // window ends
  for (int i = 1; i <= nc; ++i) {           // separation pairs
    const Patient& p = inst.patient(i);
    if (!p.is_double()) continue;
    const long q1 =
        static_cast<long>(inst.qualified(p.demands[0].service).size());
    const long q2 =
        static_cast<long>(inst.qualified(p.demands[1].service).size());
    rows += 2 * q1 * q2;
  }
  e.constraints = rows;
  return e;
}

long naive_kendall(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  std::vector<int> pos_a(n), pos_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    pos_a[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    pos_b[static_cast<std::size_t>(b[i])] = static_cast<int>(i);
  }
  long discordant = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const bool in_a = pos_a[x] < pos_a[y];
      const bool in_b = pos_b[x] < pos_b[y];
      if (in_a != in_b) ++discordant;
    }
  }
  return discordant;
}

}  // namespace hhcrsp::test
