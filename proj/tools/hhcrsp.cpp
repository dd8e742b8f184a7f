#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hhcrsp/brkga.hpp"
#include "hhcrsp/mip_export.hpp"
#include "hhcrsp/oracle.hpp"
#include "hhcrsp/parallel.hpp"
#include "hhcrsp/report.hpp"
#include "hhcrsp/settings.hpp"

namespace fs = std::filesystem;
using namespace hhcrsp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// key=value generator spec: subset, num_patients, num_caregivers, seed,
// horizon, tw_width, force_simultaneous, force_precedence
GenSpec parse_genspec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  GenSpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream pair(line);
    std::string key;
    if (!std::getline(pair, key, '=')) continue;
    key.erase(key.find_last_not_of(" \t") + 1);
    key.erase(0, key.find_first_not_of(" \t"));
    if (key.empty()) continue;
    std::string value;
    std::getline(pair, value);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    try {
      if (key == "subset") {
        const GenSpec named = subset_spec(value.at(0), spec.seed);
        spec.subset = named.subset;
        spec.num_patients = named.num_patients;
        spec.num_caregivers = named.num_caregivers;
      } else if (key == "num_patients") spec.num_patients = std::stoi(value);
      else if (key == "num_caregivers") spec.num_caregivers = std::stoi(value);
      else if (key == "seed") spec.seed = std::stoull(value);
      else if (key == "horizon") spec.horizon = std::stod(value);
      else if (key == "tw_width") spec.tw_width = std::stod(value);
      else if (key == "force_simultaneous")
        spec.force_simultaneous = std::stoi(value);
      else if (key == "force_precedence")
        spec.force_precedence = std::stoi(value);
      else throw std::invalid_argument("unknown key '" + key + "'");
    } catch (const std::exception& e) {
      throw std::invalid_argument("spec file line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  return spec;
}

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t a = std::stoull(text.substr(0, dots));
    const std::uint64_t b = std::stoull(text.substr(dots + 2));
    if (b < a) throw std::invalid_argument("seed range must be ascending");
    for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
  } else {
    std::istringstream iss(text);
    std::string tok;
    while (std::getline(iss, tok, ',')) seeds.push_back(std::stoull(tok));
  }
  if (seeds.empty()) throw std::invalid_argument("empty seed list");
  return seeds;
}

// instances reach the solver either as file paths or as "gen:<subset>:<seed>"
// sources that are regenerated on demand
Instance instance_from_source(const std::string& source,
                              InstanceFormat format) {
  if (source.rfind("gen:", 0) == 0) {
    const auto colon = source.find(':', 4);
    if (colon == std::string::npos || colon + 1 >= source.size())
      throw std::invalid_argument("generator source must be gen:<subset>:<seed>");
    const char subset = source.at(4);
    const std::uint64_t seed = std::stoull(source.substr(colon + 1));
    return generate_instance(subset_spec(subset, seed));
  }
  return load_instance(source, format);
}

enum class Variant { mp, mp_mi, mp_ipr, mp_mi_ipr };

Variant parse_variant(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (name.rfind("brkga-", 0) == 0) name = name.substr(6);
  if (name == "mp") return Variant::mp;
  if (name == "mp-mi") return Variant::mp_mi;
  if (name == "mp-ipr") return Variant::mp_ipr;
  if (name == "mp-mi-ipr") return Variant::mp_mi_ipr;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::mp: return "BRKGA-MP";
    case Variant::mp_mi: return "BRKGA-MP-MI";
    case Variant::mp_ipr: return "BRKGA-MP-IPR";
    case Variant::mp_mi_ipr: return "BRKGA-MP-MI-IPR";
  }
  return "?";
}

struct RunRow {
  std::string instance;
  std::string variant;
  std::string decoder;
  std::uint64_t seed = 0;
  double best = 0;
  long generations = 0;
  double seconds = 0;
};

std::string aggregate_csv(const std::vector<RunRow>& rows) {
  std::map<std::tuple<std::string, std::string, std::string>,
           std::vector<const RunRow*>>
      groups;
  for (const RunRow& r : rows)
    groups[{r.instance, r.variant, r.decoder}].push_back(&r);
  std::ostringstream out;
  out << "instance,variant,decoder,best,avg,sd,mean_generations,mean_seconds\n";
  for (const auto& [key, members] : groups) {
    double best = members.front()->best;
    double sum = 0, gens = 0, secs = 0;
    for (const RunRow* r : members) {
      best = std::min(best, r->best);
      sum += r->best;
      gens += static_cast<double>(r->generations);
      secs += r->seconds;
    }
    const double n = static_cast<double>(members.size());
    const double avg = sum / n;
    double sq = 0;
    for (const RunRow* r : members) sq += (r->best - avg) * (r->best - avg);
    const double sd = members.size() > 1 ? std::sqrt(sq / (n - 1)) : 0.0;
    out << std::get<0>(key) << ',' << std::get<1>(key) << ','
        << std::get<2>(key) << ',' << fmt_double(best) << ','
        << fmt_double(avg) << ',' << fmt_double(sd) << ',' << gens / n << ','
        << secs / n << "\n";
  }
  return out.str();
}

int cmd_generate(const GenSpec& base, const std::vector<std::uint64_t>& seeds,
                 const std::string& out_dir) {
  fs::create_directories(out_dir);
  for (std::uint64_t seed : seeds) {
    GenSpec spec = base;
    spec.seed = seed;
    const Instance inst = generate_instance(spec);
    const fs::path path = fs::path(out_dir) / (inst.name + ".hhcrsp");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    serialize_instance(inst, out);
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_solve(const std::vector<std::string>& instance_sources,
              InstanceFormat format, SolverSettings settings,
              const std::vector<std::uint64_t>& seeds, Variant variant,
              const std::string& out_dir, int jobs) {
  switch (variant) {
    case Variant::mp:
      settings.brkga.num_islands = 1;
      settings.ipr_enabled = false;
      break;
    case Variant::mp_mi:
      settings.ipr_enabled = false;
      break;
    case Variant::mp_ipr:
      settings.brkga.num_islands = 1;
      break;
    case Variant::mp_mi_ipr:
      break;
  }
  const std::string decoder_label =
      settings.decoder.mode == DecoderMode::simple ? "SD" : "FD";

  struct Job {
    std::string source;
    std::uint64_t seed;
  };
  std::vector<Job> jobs_list;
  for (const std::string& source : instance_sources)
    for (std::uint64_t seed : seeds) jobs_list.push_back({source, seed});

  std::map<std::string, Instance> instances;
  for (const std::string& source : instance_sources)
    instances.emplace(source, instance_from_source(source, format));

  fs::create_directories(out_dir);
  std::vector<RunRow> rows(jobs_list.size());
  std::vector<std::string> failures(jobs_list.size());
  parallel_for(jobs_list.size(), jobs, [&](std::size_t idx) {
    const Job& job = jobs_list[idx];
    const Instance& inst = instances.at(job.source);
    SolverSettings local = settings;
    local.brkga.seed = job.seed;
    try {
      RunReport report =
          run(inst, local.brkga, local.decoder,
              local.ipr_enabled ? std::optional<IprConfig>(local.ipr)
                                : std::nullopt,
              local.weights, local.workers);
      report.instance_path = job.source;
      const std::string stem = inst.name + "_" + variant_name(variant) + "_" +
                               decoder_label + "_s" +
                               std::to_string(job.seed);
      std::ofstream out(fs::path(out_dir) / (stem + ".json"));
      write_report_json(report, out);
      rows[idx] = {inst.name,
                   variant_name(variant),
                   decoder_label,
                   job.seed,
                   report.best_fitness,
                   report.generations_evolved,
                   report.wall_seconds};
    } catch (const std::exception& e) {
      failures[idx] = e.what();
    }
  });
  for (const std::string& f : failures)
    if (!f.empty()) throw std::runtime_error("run failed: " + f);

  std::ofstream runs_csv(fs::path(out_dir) / "runs.csv");
  runs_csv << "instance,variant,decoder,seed,best,generations,seconds\n";
  for (const RunRow& r : rows)
    runs_csv << r.instance << ',' << r.variant << ',' << r.decoder << ','
             << r.seed << ',' << fmt_double(r.best) << ',' << r.generations
             << ',' << r.seconds << "\n";

  std::ofstream agg_csv(fs::path(out_dir) / "aggregate.csv");
  agg_csv << aggregate_csv(rows);
  std::cout << "wrote " << rows.size() << " runs to " << out_dir << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& path, InstanceFormat format,
               const std::string& kind, DecoderMode mode) {
  const Instance inst = load_instance(path, format);
  DecoderConfig cfg;
  cfg.mode = mode;
  const OracleResult result = kind == "routing"
                                  ? best_routing(inst)
                                  : best_decoder_reachable(inst, cfg);
  serialize_solution(result.best_solution, std::cout);
  std::cout << "SPACE " << result.space_size << "\n";
  return kExitOk;
}

int cmd_export_mip(const std::string& path, InstanceFormat format,
                   const std::string& out_path, const Weights& w) {
  const Instance inst = load_instance(path, format);
  if (out_path == "-") {
    export_mip(inst, w, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    const MipStats stats = export_mip(inst, w, out);
    std::cout << "binary=" << stats.num_binary_vars
              << " continuous=" << stats.num_continuous_vars
              << " constraints=" << stats.num_constraints << "\n";
  }
  return kExitOk;
}

int cmd_report(const std::string& dir) {
  std::vector<RunRow> rows;
  std::map<std::string, Instance> instances;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no run reports in " + dir);

  for (const fs::path& file : files) {
    std::ifstream in(file);
    // instance path is needed before full parsing; peek it cheaply
    std::string raw((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    const auto probe = nlohmann::json::parse(raw);
    const std::string inst_path = probe.at("instance_path").get<std::string>();
    auto it = instances.find(inst_path);
    if (it == instances.end())
      it = instances
               .emplace(inst_path,
                        instance_from_source(inst_path, InstanceFormat::native))
               .first;
    const Instance& inst = it->second;

    std::istringstream again(raw);
    const RunReport report = read_report_json(again, inst);

    const auto violations = validate(report.best_solution, inst);
    if (!violations.empty())
      throw std::logic_error("stored solution for " + file.string() +
                             " is infeasible: " +
                             to_string(violations.front()));
    const CostComponents fresh =
        evaluate(report.best_solution, inst, report.weights);
    if (fresh.objective != report.best_fitness ||
        fresh.dist != report.best_solution.cost.dist ||
        fresh.tard != report.best_solution.cost.tard ||
        fresh.tmax != report.best_solution.cost.tmax)
      throw std::logic_error("stored cost for " + file.string() +
                             " does not re-evaluate");

    std::string variant = "BRKGA-MP";
    if (report.config.num_islands > 1) variant += "-MI";
    if (report.ipr) variant += "-IPR";
    rows.push_back({report.instance_name, variant,
                    report.decoder.mode == DecoderMode::simple ? "SD" : "FD",
                    report.seed, report.best_fitness,
                    report.generations_evolved, report.wall_seconds});
  }

  std::cout << aggregate_csv(rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HHCRSP solver toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "generate benchmark-style instances");
  std::string gen_subset, gen_spec_file;
  GenSpec gen_spec;
  std::string gen_seeds = "1";
  std::string gen_out = ".";
  gen->add_option("--subset", gen_subset, "benchmark subset A..G");
  gen->add_option("--spec-file", gen_spec_file, "key=value generator spec");
  gen->add_option("--patients", gen_spec.num_patients, "custom patient count");
  gen->add_option("--caregivers", gen_spec.num_caregivers,
                  "custom caregiver count");
  gen->add_option("--horizon", gen_spec.horizon, "planning horizon (minutes)");
  gen->add_option("--tw-width", gen_spec.tw_width, "time-window width");
  gen->add_option("--sim", gen_spec.force_simultaneous,
                  "override simultaneous double-service count");
  gen->add_option("--prec", gen_spec.force_precedence,
                  "override precedence double-service count");
  gen->add_option("--seed,--seed-range", gen_seeds, "seed or range a..b");
  gen->add_option("--out", gen_out, "output directory");

  // solve
  auto* solve = app.add_subcommand("solve", "run the evolutionary solver");
  std::vector<std::string> solve_instances;
  std::string solve_format = "native";
  std::string solve_config;
  std::vector<std::string> solve_sets;
  std::string solve_seeds = "1..20";
  std::string solve_variant = "mp-mi-ipr";
  std::string solve_decoder;
  std::string solve_out = "out";
  int solve_jobs = 1;
  std::vector<std::string> solve_gens;
  solve->add_option("--instance", solve_instances, "instance file(s)");
  solve->add_option("--gen", solve_gens,
                    "generate instead of loading: <subset>:<seed>");
  solve->add_option("--format", solve_format, "native|legacy");
  solve->add_option("--config", solve_config, "key=value settings file");
  solve->add_option("--set", solve_sets, "override setting key=value");
  solve->add_option("--seed-range,--seeds", solve_seeds,
                    "seeds: a..b or comma list");
  solve->add_option("--variant", solve_variant,
                    "mp | mp-mi | mp-ipr | mp-mi-ipr");
  solve->add_option("--decoder", solve_decoder, "sd|fd");
  solve->add_option("--out", solve_out, "output directory");
  solve->add_option("--jobs", solve_jobs, "concurrent runs");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive reference search");
  std::string oracle_instance, oracle_kind = "decoder",
              oracle_format = "native", oracle_mode = "fd";
  oracle->add_option("--instance", oracle_instance, "instance file")
      ->required();
  oracle->add_option("--kind", oracle_kind, "decoder|routing");
  oracle->add_option("--mode", oracle_mode, "sd|fd (decoder kind)");
  oracle->add_option("--format", oracle_format, "native|legacy");

  // export-mip
  auto* mip = app.add_subcommand("export-mip", "write the LP model");
  std::string mip_instance, mip_out = "-", mip_format = "native";
  mip->add_option("--instance", mip_instance, "instance file")->required();
  mip->add_option("--out", mip_out, "output file, '-' for stdout");
  mip->add_option("--format", mip_format, "native|legacy");

  // report
  auto* rep = app.add_subcommand("report", "re-validate runs and aggregate");
  std::string rep_dir;
  rep->add_option("--dir", rep_dir, "directory with run JSON files")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto to_format = [](const std::string& f) {
    if (f == "native") return InstanceFormat::native;
    if (f == "legacy") return InstanceFormat::legacy;
    throw std::invalid_argument("format must be native|legacy");
  };

  try {
    if (gen->parsed()) {
      if (!gen_spec_file.empty()) {
        gen_spec = parse_genspec_file(gen_spec_file);
        if (gen->count("--seed") == 0)
          gen_seeds = std::to_string(gen_spec.seed);
      }
      if (!gen_subset.empty()) {
        const GenSpec named = subset_spec(gen_subset.at(0), 1);
        gen_spec.subset = named.subset;
        gen_spec.num_patients = named.num_patients;
        gen_spec.num_caregivers = named.num_caregivers;
      }
      if (gen_spec.num_patients < 1 || gen_spec.num_caregivers < 1)
        throw std::invalid_argument(
            "need --subset, --spec-file, or --patients/--caregivers");
      return cmd_generate(gen_spec, parse_seed_range(gen_seeds), gen_out);
    }
    if (solve->parsed()) {
      SolverSettings settings;
      if (!solve_config.empty()) settings = load_settings(solve_config);
      for (const std::string& kv : solve_sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("--set expects key=value");
        apply_setting(settings, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (!solve_decoder.empty())
        apply_setting(settings, "decoder_mode", solve_decoder);
      std::vector<std::string> sources = solve_instances;
      for (const std::string& g : solve_gens) sources.push_back("gen:" + g);
      if (sources.empty())
        throw std::invalid_argument("need --instance or --gen");
      return cmd_solve(sources, to_format(solve_format), settings,
                       parse_seed_range(solve_seeds),
                       parse_variant(solve_variant), solve_out, solve_jobs);
    }
    if (oracle->parsed()) {
      if (oracle_kind != "decoder" && oracle_kind != "routing")
        throw std::invalid_argument("--kind must be decoder|routing");
      return cmd_oracle(oracle_instance, to_format(oracle_format), oracle_kind,
                        oracle_mode == "sd" ? DecoderMode::simple
                                            : DecoderMode::full);
    }
    if (mip->parsed())
      return cmd_export_mip(mip_instance, to_format(mip_format), mip_out,
                            Weights{});
    if (rep->parsed()) return cmd_report(rep_dir);
  } catch (const std::logic_error& e) {
    // invalid_argument is usage/data, plain logic_error is an internal bug
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitData;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
