#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hhcrsp {

// Service types are 1-based; a lower id has global priority over higher ids.
using ServiceTypeId = int;

struct ServiceDemand {
  ServiceTypeId service = 0;
  double duration = 0;  // minutes, > 0
};

struct Patient {
  int id = 0;  // 1..|C|
  double x = 0, y = 0;
  double tw_start = 0;  // hard earliest service start
  double tw_end = 0;    // soft latest start; later starts are tardy
  double sep_min = 0;   // separation bounds between the two starts of a
  double sep_max = 0;   // double-service patient; 0/0 means simultaneous
  std::vector<ServiceDemand> demands;  // 1 or 2 entries, ascending service id

  bool is_double() const { return demands.size() == 2; }
  bool is_simultaneous() const {
    return is_double() && sep_min == 0 && sep_max == 0;
  }
  bool demands_service(ServiceTypeId s) const {
    for (const auto& d : demands)
      if (d.service == s) return true;
    return false;
  }
  double duration_of(ServiceTypeId s) const {
    for (const auto& d : demands)
      if (d.service == s) return d.duration;
    throw std::out_of_range("patient does not demand service");
  }
};

struct Caregiver {
  int id = 0;  // 1..|V|
  std::vector<ServiceTypeId> skills;  // ascending, nonempty

  bool has_skill(ServiceTypeId s) const {
    for (ServiceTypeId k : skills)
      if (k == s) return true;
    return false;
  }
};

// Symmetric travel times over node ids; node 0 is the depot, node i >= 1 is
// patient i.
class TravelMatrix {
 public:
  TravelMatrix() = default;
  explicit TravelMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  double operator()(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }
  double& at(int i, int j) {
    return d_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

struct Instance {
  std::string name;
  std::vector<Patient> patients;
  std::vector<Caregiver> caregivers;
  int num_services = 0;
  TravelMatrix travel;
  double horizon = 600;
  double big_m = 0;  // big-M constant, used by the model exporter only

  int num_patients() const { return static_cast<int>(patients.size()); }
  int num_caregivers() const { return static_cast<int>(caregivers.size()); }
  const Patient& patient(int id) const { return patients[id - 1]; }
  const Caregiver& caregiver(int id) const { return caregivers[id - 1]; }
  double travel_time(int i, int j) const { return travel(i, j); }

  std::vector<int> qualified(ServiceTypeId s) const;  // caregiver ids, asc

  // Throws std::invalid_argument describing the first broken invariant.
  void check_invariants() const;

  // horizon + max service duration + max travel time.
  static double derive_big_m(const Instance& inst);
};

enum class InstanceFormat { native, legacy };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::istream& in,
                        InstanceFormat format = InstanceFormat::native);
Instance load_instance(const std::string& path,
                       InstanceFormat format = InstanceFormat::native);
void serialize_instance(const Instance& inst, std::ostream& out);
std::string serialize_instance(const Instance& inst);

struct GenSpec {
  std::optional<char> subset;  // 'A'..'G'; unset = custom sizes
  int num_patients = 0;
  int num_caregivers = 0;
  std::uint64_t seed = 1;
  double horizon = 600;
  double tw_width = 120;
  // Desk-scale overrides for the double-service mix; negative derives the
  // counts from the benchmark recipe.
  int force_simultaneous = -1;
  int force_precedence = -1;
};

// Fills patient/caregiver counts for a named benchmark subset.
GenSpec subset_spec(char subset, std::uint64_t seed);

Instance generate_instance(const GenSpec& spec);

// Full-precision Euclidean distances; index 0 is the depot.
TravelMatrix euclidean_travel(const std::vector<std::pair<double, double>>& points);

}  // namespace hhcrsp
