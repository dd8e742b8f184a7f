// End-to-end checks of the command-line tool: spawns the built binary and
// inspects exit codes and artifacts. Path to the binary comes in argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

#define CHECK_TRUE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) {                                                         \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << #cond \
                << "\n";                                                   \
      ++failures;                                                          \
    }                                                                      \
  } while (0)

int run_cmd(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// drops the trailing (wall-clock) column from every CSV line
std::string strip_seconds(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const auto comma = line.rfind(',');
    out << line.substr(0, comma) << "\n";
  }
  return out.str();
}

const std::string kSmall =
    " --set population_size=30 --set elite_pct=0.2 --set mutant_pct=0.2"
    " --set total_parents=2 --set elite_parents=1 --set immigrants=2"
    " --set exchange_interval=3 --set ipr_pairs=3 --set ipr_frequency=3"
    " --set stall_limit=4";

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-hhcrsp>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = fs::temp_directory_path() / "hhcrsp_cli_tests";
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string quiet = " > /dev/null 2>&1";

  // usage errors exit with 1
  CHECK_TRUE(run_cmd(cli + quiet) == 1);
  CHECK_TRUE(run_cmd(cli + " solve --no-such-flag" + quiet) == 1);
  // data errors exit with 2
  CHECK_TRUE(run_cmd(cli + " solve --instance /nonexistent.hhcrsp" + quiet) ==
             2);
  CHECK_TRUE(run_cmd(cli + " generate --subset Z --out " + work.string() +
                     quiet) == 2);

  // generate: named file per subset and seed
  CHECK_TRUE(run_cmd(cli + " generate --subset A --seed 1 --out " +
                     work.string() + quiet) == 0);
  const fs::path inst = work / "A-gen-s1.hhcrsp";
  CHECK_TRUE(fs::exists(inst));

  // solve: per-run reports plus both CSVs
  const fs::path out1 = work / "runs1";
  const std::string solve_cmd = cli + " solve --instance " + inst.string() +
                                " --seeds 1..2 --variant mp --decoder sd" +
                                kSmall + " --out ";
  CHECK_TRUE(run_cmd(solve_cmd + out1.string() + quiet) == 0);
  CHECK_TRUE(fs::exists(out1 / "runs.csv"));
  CHECK_TRUE(fs::exists(out1 / "aggregate.csv"));
  CHECK_TRUE(fs::exists(out1 / "A-gen-s1_BRKGA-MP_SD_s1.json"));
  CHECK_TRUE(fs::exists(out1 / "A-gen-s1_BRKGA-MP_SD_s2.json"));
  {
    const std::string runs = slurp(out1 / "runs.csv");
    CHECK_TRUE(runs.rfind("instance,variant,decoder,seed,best,generations,"
                          "seconds\n", 0) == 0);
    CHECK_TRUE(runs.find("A-gen-s1,BRKGA-MP,SD,1,") != std::string::npos);
    CHECK_TRUE(runs.find("A-gen-s1,BRKGA-MP,SD,2,") != std::string::npos);
    // the MP variant runs one island and no path-relinking
    const std::string report = slurp(out1 / "A-gen-s1_BRKGA-MP_SD_s1.json");
    CHECK_TRUE(report.find("\"num_islands\": 1") != std::string::npos);
    CHECK_TRUE(report.find("\"ipr\"") == std::string::npos);
    CHECK_TRUE(report.find("\"immigrations\": []") != std::string::npos);
  }

  // identical plan, identical results (wall time may differ)
  const fs::path out2 = work / "runs2";
  CHECK_TRUE(run_cmd(solve_cmd + out2.string() + quiet) == 0);
  CHECK_TRUE(strip_seconds(slurp(out1 / "runs.csv")) ==
             strip_seconds(slurp(out2 / "runs.csv")));
  CHECK_TRUE(strip_seconds(slurp(out1 / "aggregate.csv")) ==
             strip_seconds(slurp(out2 / "aggregate.csv")));

  // concurrent runs produce the same artifacts
  const fs::path out3 = work / "runs3";
  CHECK_TRUE(run_cmd(solve_cmd + out3.string() + " --jobs 2" + quiet) == 0);
  CHECK_TRUE(strip_seconds(slurp(out1 / "runs.csv")) ==
             strip_seconds(slurp(out3 / "runs.csv")));

  // settings file with flag overrides
  const fs::path cfg_file = work / "solver.cfg";
  {
    std::ofstream cfg(cfg_file);
    cfg << "# small test configuration\n"
        << "population_size=30\nelite_pct=0.2\nmutant_pct=0.2\n"
        << "total_parents=2\nelite_parents=1\nimmigrants=2\n"
        << "exchange_interval=3\nipr_pairs=3\nipr_frequency=3\n"
        << "stall_limit=4\ndecoder_mode=sd\n";
  }
  const fs::path out4 = work / "runs4";
  CHECK_TRUE(run_cmd(cli + " solve --instance " + inst.string() +
                     " --seeds 1..2 --variant mp --config " +
                     cfg_file.string() + " --out " + out4.string() + quiet) ==
             0);
  CHECK_TRUE(strip_seconds(slurp(out1 / "runs.csv")) ==
             strip_seconds(slurp(out4 / "runs.csv")));

  // report re-validates and reproduces the aggregates
  CHECK_TRUE(run_cmd(cli + " report --dir " + out1.string() + quiet) == 0);

  // a tampered best value must be caught as an internal invariant failure
  const fs::path tampered = out1 / "A-gen-s1_BRKGA-MP_SD_s1.json";
  std::string text = slurp(tampered);
  const auto pos = text.find("\"objective\": ");
  CHECK_TRUE(pos != std::string::npos);
  const auto value_end = text.find_first_of(",}", pos);
  text.replace(pos, value_end - pos, "\"objective\": 999999.0");
  {
    std::ofstream patch(tampered);
    patch << text;
  }
  CHECK_TRUE(run_cmd(cli + " report --dir " + out1.string() + quiet) == 3);

  // oracle subcommand emits the solution and the space size; the
  // enumeration guards reject benchmark-sized inputs
  CHECK_TRUE(run_cmd(cli + " oracle --instance " + inst.string() +
                     " --kind decoder" + quiet) == 2);
  CHECK_TRUE(run_cmd(cli + " generate --patients 3 --caregivers 2 --seed 5" +
                     " --out " + work.string() + quiet) == 0);
  const fs::path tiny = work / "custom3x2-gen-s5.hhcrsp";
  CHECK_TRUE(fs::exists(tiny));
  for (const std::string kind : {"decoder", "routing"}) {
    const std::string cmd = cli + " oracle --instance " + tiny.string() +
                            " --kind " + kind + " > " +
                            (work / "oracle.txt").string() + " 2>/dev/null";
    CHECK_TRUE(run_cmd(cmd) == 0);
    const std::string oracle = slurp(work / "oracle.txt");
    CHECK_TRUE(oracle.find("ROUTE 1") != std::string::npos);
    CHECK_TRUE(oracle.find("COST ") != std::string::npos);
    CHECK_TRUE(oracle.find("SPACE ") != std::string::npos);
  }

  // inline generator sources and comma seed lists; report regenerates them
  {
    const fs::path out5 = work / "runs5";
    CHECK_TRUE(run_cmd(cli + " solve --gen A:1 --seeds 2,4 --variant mp" +
                       " --decoder sd" + kSmall + " --out " + out5.string() +
                       quiet) == 0);
    const std::string runs = slurp(out5 / "runs.csv");
    CHECK_TRUE(runs.find("A-gen-s1,BRKGA-MP,SD,2,") != std::string::npos);
    CHECK_TRUE(runs.find("A-gen-s1,BRKGA-MP,SD,4,") != std::string::npos);
    CHECK_TRUE(runs.find("A-gen-s1,BRKGA-MP,SD,3,") ==
               std::string::npos);  // only seeds 2 and 4
    CHECK_TRUE(run_cmd(cli + " report --dir " + out5.string() + quiet) == 0);
  }

  // model export
  {
    const fs::path lp = work / "model.lp";
    CHECK_TRUE(run_cmd(cli + " export-mip --instance " + inst.string() +
                       " --out " + lp.string() + quiet) == 0);
    const std::string text_lp = slurp(lp);
    CHECK_TRUE(text_lp.rfind("\\ HHCRSP model", 0) == 0);
    CHECK_TRUE(text_lp.find("Minimize") != std::string::npos);
    CHECK_TRUE(text_lp.find("Binary") != std::string::npos);
    CHECK_TRUE(text_lp.find("End") != std::string::npos);
  }

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << failures << " checks failed\n";
  return 1;
}
