#include "hhcrsp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hhcrsp/rng.hpp"

namespace hhcrsp {

namespace {

// Canonical double formatting: shortest form that round-trips exactly,
// integers as plain decimals.
std::string fmt_double(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[40];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

}  // namespace

std::vector<int> Instance::qualified(ServiceTypeId s) const {
  std::vector<int> ids;
  for (const auto& cg : caregivers)
    if (cg.has_skill(s)) ids.push_back(cg.id);
  return ids;
}

void Instance::check_invariants() const {
  const int n = num_patients();
  if (travel.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("travel matrix dimension must be |C|+1");
  for (int i = 0; i <= n; ++i) {
    if (travel(i, i) != 0)
      throw std::invalid_argument("travel matrix diagonal must be zero");
    for (int j = 0; j <= n; ++j) {
      const double d = travel(i, j);
      if (!(d >= 0) || !std::isfinite(d))
        throw std::invalid_argument("travel times must be finite and >= 0");
      if (d != travel(j, i))
        throw std::invalid_argument("travel matrix must be symmetric");
    }
  }
  if (num_services < 1) throw std::invalid_argument("need at least 1 service");
  for (std::size_t k = 0; k < patients.size(); ++k) {
    const Patient& p = patients[k];
    if (p.id != static_cast<int>(k) + 1)
      throw std::invalid_argument("patient ids must be contiguous from 1");
    if (p.demands.empty() || p.demands.size() > 2)
      throw std::invalid_argument("patient must demand 1 or 2 services");
    if (p.demands.size() == 2 &&
        p.demands[0].service >= p.demands[1].service)
      throw std::invalid_argument(
          "double-service demands must be distinct and ascending");
    for (const auto& d : p.demands) {
      if (d.service < 1 || d.service > num_services)
        throw std::invalid_argument("demanded service id out of range");
      if (!(d.duration > 0))
        throw std::invalid_argument("service durations must be > 0");
    }
    if (!(p.tw_start < p.tw_end))
      throw std::invalid_argument("time window must satisfy start < end");
    if (p.is_double()) {
      if (p.sep_min > p.sep_max)
        throw std::invalid_argument("sep_min must be <= sep_max");
      if (p.sep_min < 0)
        throw std::invalid_argument("separation bounds must be >= 0");
    }
  }
  for (std::size_t k = 0; k < caregivers.size(); ++k) {
    const Caregiver& cg = caregivers[k];
    if (cg.id != static_cast<int>(k) + 1)
      throw std::invalid_argument("caregiver ids must be contiguous from 1");
    if (cg.skills.empty())
      throw std::invalid_argument("caregiver skill set must be nonempty");
    for (ServiceTypeId s : cg.skills)
      if (s < 1 || s > num_services)
        throw std::invalid_argument("caregiver skill out of range");
  }
  for (const Patient& p : patients)
    for (const auto& d : p.demands)
      if (qualified(d.service).empty())
        throw std::invalid_argument(
            "demanded service " + std::to_string(d.service) +
            " has no qualified caregiver (patient " + std::to_string(p.id) +
            ")");
}

double Instance::derive_big_m(const Instance& inst) {
  // Upper bound on any start time that a single-tour schedule can need: the
  // latest window opening plus, per patient, its longest service and the
  // longest leg into it, plus all minimum-separation waits. M adds one more
  // service+leg so ordering rows deactivate cleanly; anything smaller can cut
  // legitimately long routes.
  const int nc = inst.num_patients();
  double max_e = 0, max_dur = 0, max_travel = 0;
  double schedule_span = 0;
  for (const Patient& p : inst.patients) {
    max_e = std::max(max_e, p.tw_start);
    double longest_service = 0;
    for (const auto& d : p.demands) {
      longest_service = std::max(longest_service, d.duration);
      max_dur = std::max(max_dur, d.duration);
    }
    double longest_leg_in = 0;
    for (int j = 0; j <= nc; ++j)
      longest_leg_in = std::max(longest_leg_in, inst.travel(j, p.id));
    schedule_span += longest_service + longest_leg_in;
    if (p.is_double()) schedule_span += p.sep_min;
  }
  for (int i = 0; i <= nc; ++i)
    for (int j = 0; j <= nc; ++j)
      max_travel = std::max(max_travel, inst.travel(i, j));
  return std::ceil(max_e + schedule_span + max_dur + max_travel);
}

TravelMatrix euclidean_travel(
    const std::vector<std::pair<double, double>>& points) {
  TravelMatrix m(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dx = points[i].first - points[j].first;
      const double dy = points[i].second - points[j].second;
      const double d = std::sqrt(dx * dx + dy * dy);
      m.at(static_cast<int>(i), static_cast<int>(j)) = d;
      m.at(static_cast<int>(j), static_cast<int>(i)) = d;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Native text format
// ---------------------------------------------------------------------------

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next non-empty, non-comment line; false at EOF.
  bool next(std::string& out) {
    std::string s;
    while (std::getline(in, s)) {
      ++line_no;
      const auto hash = s.find('#');
      if (hash != std::string::npos) s.erase(hash);
      // trim
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = s.find_last_not_of(" \t\r");
      out = s.substr(b, e - b + 1);
      return true;
    }
    return false;
  }
};

double parse_num(const std::string& tok, int line) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "trailing characters in number '" + tok + "'");
  return v;
}

int parse_int(const std::string& tok, int line) {
  const double v = parse_num(tok, line);
  if (v != std::floor(v))
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

Instance parse_native(std::istream& in) {
  LineReader rd{in};
  std::string line;
  if (!rd.next(line)) throw ParseError(rd.line_no, "empty input");
  auto toks = split(line);
  if (toks.size() < 2 || toks[0] != "HHCRSP")
    throw ParseError(rd.line_no, "expected header 'HHCRSP <name>'");
  Instance inst;
  inst.name = line.substr(line.find(toks[1]));

  if (!rd.next(line)) throw ParseError(rd.line_no, "missing SIZES line");
  toks = split(line);
  if (toks.size() != 5 || toks[0] != "SIZES")
    throw ParseError(rd.line_no,
                     "expected 'SIZES <|C|> <|V|> <|S|> <horizon>'");
  const int nc = parse_int(toks[1], rd.line_no);
  const int nv = parse_int(toks[2], rd.line_no);
  inst.num_services = parse_int(toks[3], rd.line_no);
  inst.horizon = parse_num(toks[4], rd.line_no);
  if (nc < 0 || nv < 1 || inst.num_services < 1)
    throw ParseError(rd.line_no, "SIZES values out of range");

  for (int i = 0; i < nc; ++i) {
    if (!rd.next(line)) throw ParseError(rd.line_no, "missing PATIENT line");
    toks = split(line);
    if (toks.size() < 9 || toks[0] != "PATIENT")
      throw ParseError(rd.line_no, "expected PATIENT line");
    Patient p;
    p.id = parse_int(toks[1], rd.line_no);
    p.x = parse_num(toks[2], rd.line_no);
    p.y = parse_num(toks[3], rd.line_no);
    p.tw_start = parse_num(toks[4], rd.line_no);
    p.tw_end = parse_num(toks[5], rd.line_no);
    p.sep_min = parse_num(toks[6], rd.line_no);
    p.sep_max = parse_num(toks[7], rd.line_no);
    const int k = parse_int(toks[8], rd.line_no);
    if (k < 1 || k > 2)
      throw ParseError(rd.line_no, "patient must demand 1 or 2 services");
    if (toks.size() != 9 + 2 * static_cast<std::size_t>(k))
      throw ParseError(rd.line_no, "wrong number of demand fields");
    for (int d = 0; d < k; ++d) {
      ServiceDemand dem;
      dem.service = parse_int(toks[9 + 2 * d], rd.line_no);
      dem.duration = parse_num(toks[10 + 2 * d], rd.line_no);
      p.demands.push_back(dem);
    }
    std::sort(p.demands.begin(), p.demands.end(),
              [](const auto& a, const auto& b) { return a.service < b.service; });
    if (!p.is_double()) {
      p.sep_min = 0;  // separation is meaningless for single services
      p.sep_max = 0;
    }
    inst.patients.push_back(std::move(p));
  }

  for (int v = 0; v < nv; ++v) {
    if (!rd.next(line)) throw ParseError(rd.line_no, "missing CAREGIVER line");
    toks = split(line);
    if (toks.size() < 3 || toks[0] != "CAREGIVER")
      throw ParseError(rd.line_no, "expected CAREGIVER line");
    Caregiver cg;
    cg.id = parse_int(toks[1], rd.line_no);
    const int k = parse_int(toks[2], rd.line_no);
    if (k < 1) throw ParseError(rd.line_no, "caregiver needs >= 1 skill");
    if (toks.size() != 3 + static_cast<std::size_t>(k))
      throw ParseError(rd.line_no, "wrong number of skill fields");
    for (int s = 0; s < k; ++s)
      cg.skills.push_back(parse_int(toks[3 + s], rd.line_no));
    std::sort(cg.skills.begin(), cg.skills.end());
    cg.skills.erase(std::unique(cg.skills.begin(), cg.skills.end()),
                    cg.skills.end());
    inst.caregivers.push_back(std::move(cg));
  }

  if (!rd.next(line) || line != "TRAVEL")
    throw ParseError(rd.line_no, "expected TRAVEL section");
  inst.travel = TravelMatrix(static_cast<std::size_t>(nc) + 1);
  for (int i = 0; i <= nc; ++i) {
    if (!rd.next(line))
      throw ParseError(rd.line_no, "travel matrix row count != |C|+1");
    toks = split(line);
    if (toks.size() != static_cast<std::size_t>(nc) + 1)
      throw ParseError(rd.line_no, "travel matrix row has wrong width");
    for (int j = 0; j <= nc; ++j)
      inst.travel.at(i, j) = parse_num(toks[j], rd.line_no);
  }
  if (rd.next(line))
    throw ParseError(rd.line_no, "unexpected content after travel matrix");

  inst.big_m = Instance::derive_big_m(inst);
  try {
    inst.check_invariants();
  } catch (const std::invalid_argument& e) {
    throw ParseError(rd.line_no, e.what());
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Legacy reader: best-effort support for the published benchmark layout
// (label-introduced sections). Node 1 in those files is the depot.
// ---------------------------------------------------------------------------

Instance parse_legacy(std::istream& in) {
  static const std::set<std::string> labels = {
      "nbNodes", "nbVehi", "nbServi", "r", "DS",  "a", "x",
      "y",       "d",      "p",       "mind", "maxd", "e", "l"};
  std::map<std::string, std::vector<double>> section;
  std::string tok, current;
  int line_no = 1;
  while (in >> tok) {
    if (labels.count(tok)) {
      current = tok;
      section[current];
    } else {
      if (current.empty())
        throw ParseError(line_no, "legacy file must start with a label");
      try {
        section[current].push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw ParseError(line_no, "unknown token '" + tok + "'");
      }
    }
  }
  auto need = [&](const std::string& k) -> const std::vector<double>& {
    auto it = section.find(k);
    if (it == section.end())
      throw ParseError(0, "legacy file misses section '" + k + "'");
    return it->second;
  };
  auto scalar = [&](const std::string& k) {
    const auto& v = need(k);
    if (v.size() != 1)
      throw ParseError(0, "section '" + k + "' must hold one value");
    return static_cast<int>(v[0]);
  };

  const int nodes = scalar("nbNodes");
  const int nv = scalar("nbVehi");
  const int ns = scalar("nbServi");
  const int nc = nodes - 1;
  if (nc < 1) throw ParseError(0, "legacy file has no patients");

  auto grid = [&](const std::string& k, int rows, int cols)
      -> const std::vector<double>& {
    const auto& v = need(k);
    if (v.size() != static_cast<std::size_t>(rows) * cols)
      throw ParseError(0, "section '" + k + "' has wrong size");
    return v;
  };

  const auto& req = grid("r", nodes, ns);
  const auto& skill = grid("a", nv, ns);
  const auto& dist = grid("d", nodes, nodes);
  const auto& proc = grid("p", nodes, ns);
  const auto& mind = grid("mind", nodes, 1);
  const auto& maxd = grid("maxd", nodes, 1);
  const auto& tw_s = grid("e", nodes, 1);
  const auto& tw_e = grid("l", nodes, 1);
  const auto& xs = grid("x", nodes, 1);
  const auto& ys = grid("y", nodes, 1);

  Instance inst;
  inst.name = "legacy";
  inst.num_services = ns;
  for (int i = 1; i <= nc; ++i) {
    Patient p;
    p.id = i;
    p.x = xs[i];
    p.y = ys[i];
    p.tw_start = tw_s[i];
    p.tw_end = tw_e[i];
    for (int s = 0; s < ns; ++s) {
      if (req[static_cast<std::size_t>(i) * ns + s] != 0) {
        ServiceDemand dem;
        dem.service = s + 1;
        dem.duration = proc[static_cast<std::size_t>(i) * ns + s];
        p.demands.push_back(dem);
      }
    }
    if (p.is_double()) {
      p.sep_min = mind[i];
      p.sep_max = maxd[i];
    }
    inst.patients.push_back(std::move(p));
  }
  for (int v = 0; v < nv; ++v) {
    Caregiver cg;
    cg.id = v + 1;
    for (int s = 0; s < ns; ++s)
      if (skill[static_cast<std::size_t>(v) * ns + s] != 0)
        cg.skills.push_back(s + 1);
    inst.caregivers.push_back(std::move(cg));
  }
  inst.travel = TravelMatrix(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j)
      inst.travel.at(i, j) = dist[static_cast<std::size_t>(i) * nodes + j];

  double horizon = 0;
  for (const Patient& p : inst.patients)
    horizon = std::max(horizon, p.tw_end);
  inst.horizon = std::ceil(horizon);
  inst.big_m = Instance::derive_big_m(inst);
  try {
    inst.check_invariants();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return inst;
}

}  // namespace

Instance parse_instance(std::istream& in, InstanceFormat format) {
  return format == InstanceFormat::native ? parse_native(in)
                                          : parse_legacy(in);
}

Instance load_instance(const std::string& path, InstanceFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return parse_instance(in, format);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
  out << "HHCRSP " << inst.name << "\n";
  out << "SIZES " << inst.num_patients() << ' ' << inst.num_caregivers() << ' '
      << inst.num_services << ' ' << fmt_double(inst.horizon) << "\n";
  for (const Patient& p : inst.patients) {
    out << "PATIENT " << p.id << ' ' << fmt_double(p.x) << ' '
        << fmt_double(p.y) << ' ' << fmt_double(p.tw_start) << ' '
        << fmt_double(p.tw_end) << ' ' << fmt_double(p.sep_min) << ' '
        << fmt_double(p.sep_max) << ' ' << p.demands.size();
    for (const auto& d : p.demands)
      out << ' ' << d.service << ' ' << fmt_double(d.duration);
    out << "\n";
  }
  for (const Caregiver& cg : inst.caregivers) {
    out << "CAREGIVER " << cg.id << ' ' << cg.skills.size();
    for (ServiceTypeId s : cg.skills) out << ' ' << s;
    out << "\n";
  }
  out << "TRAVEL\n";
  const int n = inst.num_patients();
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (j) out << ' ';
      out << fmt_double(inst.travel(i, j));
    }
    out << "\n";
  }
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream oss;
  serialize_instance(inst, oss);
  return oss.str();
}

// ---------------------------------------------------------------------------
// Generator
// ---------------------------------------------------------------------------

GenSpec subset_spec(char subset, std::uint64_t seed) {
  GenSpec spec;
  spec.subset = subset;
  spec.seed = seed;
  switch (subset) {
    case 'A': spec.num_patients = 10;  spec.num_caregivers = 3;  break;
    case 'B': spec.num_patients = 25;  spec.num_caregivers = 5;  break;
    case 'C': spec.num_patients = 50;  spec.num_caregivers = 10; break;
    case 'D': spec.num_patients = 75;  spec.num_caregivers = 15; break;
    case 'E': spec.num_patients = 100; spec.num_caregivers = 20; break;
    case 'F': spec.num_patients = 200; spec.num_caregivers = 30; break;
    case 'G': spec.num_patients = 300; spec.num_caregivers = 40; break;
    default:
      throw std::invalid_argument("unknown subset '" + std::string(1, subset) +
                                  "', expected A..G");
  }
  return spec;
}

namespace {

// Benchmark double-service counts per subset. G deviates from the 30% rule,
// so the published table values are used verbatim for named subsets.
int subset_num_double(char subset) {
  switch (subset) {
    case 'A': return 3;
    case 'B': return 8;
    case 'C': return 15;
    case 'D': return 23;
    case 'E': return 30;
    case 'F': return 60;
    case 'G': return 100;
    default: return -1;
  }
}

enum class PatientKind { single, simultaneous, precedence };

}  // namespace

Instance generate_instance(const GenSpec& spec) {
  if (spec.num_patients < 1 || spec.num_caregivers < 1)
    throw std::invalid_argument("generator needs >= 1 patient and caregiver");
  if (!(spec.tw_width > 0) || !(spec.horizon > spec.tw_width))
    throw std::invalid_argument("horizon must exceed the window width");

  const int nc = spec.num_patients;
  const int nv = spec.num_caregivers;
  const int num_services = 6;

  int n_double = spec.subset ? subset_num_double(*spec.subset)
                             : static_cast<int>(std::llround(0.30 * nc));
  int n_sim = static_cast<int>(std::floor(0.15 * nc));
  int n_prec = n_double - n_sim;
  if (spec.force_simultaneous >= 0 || spec.force_precedence >= 0) {
    n_sim = std::max(spec.force_simultaneous, 0);
    n_prec = std::max(spec.force_precedence, 0);
    n_double = n_sim + n_prec;
  }
  if (nv < 2) {  // double services need two distinct caregivers
    n_double = n_sim = n_prec = 0;
  }
  if (n_double > nc)
    throw std::invalid_argument("double-service count exceeds |C|");

  Rng rng(spec.seed);
  Instance inst;
  if (spec.subset) {
    inst.name = std::string(1, *spec.subset) + "-gen-s" +
                std::to_string(spec.seed);
  } else {
    inst.name = "custom" + std::to_string(nc) + "x" + std::to_string(nv) +
                "-gen-s" + std::to_string(spec.seed);
  }
  inst.num_services = num_services;
  inst.horizon = spec.horizon;

  // locations on the unit grid, depot first
  std::vector<std::pair<double, double>> points;
  points.reserve(static_cast<std::size_t>(nc) + 1);
  for (int i = 0; i <= nc; ++i) {
    const double x = static_cast<double>(rng.next_int(0, 100));
    const double y = static_cast<double>(rng.next_int(0, 100));
    points.emplace_back(x, y);
  }

  std::vector<PatientKind> kinds(static_cast<std::size_t>(nc),
                                 PatientKind::single);
  for (int i = 0; i < n_sim; ++i) kinds[i] = PatientKind::simultaneous;
  for (int i = 0; i < n_prec; ++i)
    kinds[static_cast<std::size_t>(n_sim) + static_cast<std::size_t>(i)] =
        PatientKind::precedence;
  rng.shuffle(kinds);

  std::vector<double> tw_starts(static_cast<std::size_t>(nc));
  const auto tw_hi = static_cast<std::int64_t>(spec.horizon - spec.tw_width);
  for (int i = 0; i < nc; ++i)
    tw_starts[i] = static_cast<double>(rng.next_int(0, tw_hi));

  // First half of the caregivers draws skills from {1,2,3}, the rest from
  // {4,5,6}; a post-pass keeps every service type covered.
  const int first_half = (nv + 1) / 2;
  for (int v = 1; v <= nv; ++v) {
    Caregiver cg;
    cg.id = v;
    const int base = v <= first_half ? 1 : 4;
    const int mask = static_cast<int>(rng.next_int(1, 7));
    for (int b = 0; b < 3; ++b)
      if (mask & (1 << b)) cg.skills.push_back(base + b);
    inst.caregivers.push_back(std::move(cg));
  }
  for (ServiceTypeId s = 1; s <= num_services; ++s) {
    bool covered = false;
    for (const Caregiver& cg : inst.caregivers) covered |= cg.has_skill(s);
    if (covered) continue;
    const int lo = s <= 3 ? 1 : first_half + 1;
    const int hi = s <= 3 ? first_half : nv;
    if (lo > hi) continue;  // that half does not exist for tiny |V|
    Caregiver& cg =
        inst.caregivers[static_cast<std::size_t>(rng.next_int(lo, hi)) - 1];
    cg.skills.push_back(s);
    std::sort(cg.skills.begin(), cg.skills.end());
  }

  std::vector<ServiceTypeId> offered;
  for (ServiceTypeId s = 1; s <= num_services; ++s) {
    for (const Caregiver& cg : inst.caregivers) {
      if (cg.has_skill(s)) {
        offered.push_back(s);
        break;
      }
    }
  }

  auto has_disjoint_pair = [&](ServiceTypeId s1, ServiceTypeId s2) {
    for (const Caregiver& a : inst.caregivers)
      for (const Caregiver& b : inst.caregivers)
        if (a.id != b.id && a.has_skill(s1) && b.has_skill(s2)) return true;
    return false;
  };

  for (int i = 1; i <= nc; ++i) {
    Patient p;
    p.id = i;
    p.x = points[i].first;
    p.y = points[i].second;
    p.tw_start = tw_starts[i - 1];
    p.tw_end = p.tw_start + spec.tw_width;
    const PatientKind kind = kinds[i - 1];
    if (kind == PatientKind::single) {
      ServiceDemand dem;
      dem.service = offered[rng.next_index(offered.size())];
      dem.duration = static_cast<double>(rng.next_int(10, 20));
      p.demands.push_back(dem);
    } else {
      ServiceTypeId s1 = 0, s2 = 0;
      do {
        s1 = offered[rng.next_index(offered.size())];
        s2 = offered[rng.next_index(offered.size())];
        if (s1 > s2) std::swap(s1, s2);
      } while (s1 == s2 || !has_disjoint_pair(s1, s2));
      for (ServiceTypeId s : {s1, s2}) {
        ServiceDemand dem;
        dem.service = s;
        dem.duration = static_cast<double>(rng.next_int(10, 20));
        p.demands.push_back(dem);
      }
      if (kind == PatientKind::precedence) {
        p.sep_min = static_cast<double>(rng.next_int(5, 30));
        p.sep_max = p.sep_min + static_cast<double>(rng.next_int(10, 60));
      }
    }
    inst.patients.push_back(std::move(p));
  }

  inst.travel = euclidean_travel(points);
  inst.big_m = Instance::derive_big_m(inst);
  inst.check_invariants();
  return inst;
}

}  // namespace hhcrsp
