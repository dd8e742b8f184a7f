#include <sstream>

#include "doctest.h"
#include "hhcrsp/instance.hpp"
#include "hhcrsp/rng.hpp"
#include "support.hpp"

using namespace hhcrsp;

TEST_CASE("native format round-trips and reports sizes") {
  const Instance gen = generate_instance(subset_spec('A', 7));
  const std::string text = serialize_instance(gen);

  std::istringstream in(text);
  const Instance parsed = parse_instance(in);
  CHECK(parsed.num_patients() == 10);
  CHECK(parsed.num_caregivers() == 3);
  CHECK(parsed.num_services == 6);

  // canonical form is a fixed point of parse+serialize
  std::istringstream again(serialize_instance(parsed));
  CHECK(serialize_instance(parse_instance(again)) == text);
}

TEST_CASE("native parser accepts comments and blank lines") {
  const std::string text =
      "# tiny example\n"
      "HHCRSP demo\n"
      "\n"
      "SIZES 1 1 6 600   # one patient\n"
      "PATIENT 1 3 4 0 120 0 0 1 2 10\n"
      "CAREGIVER 1 1 2\n"
      "TRAVEL\n"
      "0 5\n"
      "5 0\n";
  std::istringstream in(text);
  const Instance inst = parse_instance(in);
  CHECK(inst.name == "demo");
  CHECK(inst.patient(1).demands[0].service == 2);
  CHECK(inst.travel_time(0, 1) == 5);
}

TEST_CASE("native parser rejects malformed input with line context") {
  auto expect_error = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      parse_instance(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };

  // malformed header
  expect_error("HELLO x\n", 1);
  // travel matrix too short
  expect_error(
      "HHCRSP t\nSIZES 1 1 6 600\nPATIENT 1 0 0 0 120 0 0 1 1 10\n"
      "CAREGIVER 1 1 1\nTRAVEL\n0 5\n",
      6);
  // asymmetric matrix
  expect_error(
      "HHCRSP t\nSIZES 1 1 6 600\nPATIENT 1 0 0 0 120 0 0 1 1 10\n"
      "CAREGIVER 1 1 1\nTRAVEL\n0 5\n6 0\n",
      7);
  // demanded service lacks a qualified caregiver
  expect_error(
      "HHCRSP t\nSIZES 1 1 6 600\nPATIENT 1 0 0 0 120 0 0 1 3 10\n"
      "CAREGIVER 1 1 1\nTRAVEL\n0 5\n5 0\n",
      7);
}

TEST_CASE("generator reproduces the benchmark subset shapes") {
  const Instance a = generate_instance(subset_spec('A', 1));
  CHECK(a.num_patients() == 10);
  CHECK(a.num_caregivers() == 3);
  int doubles = 0;
  for (const Patient& p : a.patients) doubles += p.is_double() ? 1 : 0;
  CHECK(doubles == 3);
  CHECK(10 - doubles == 7);

  const Instance g = generate_instance(subset_spec('G', 1));
  CHECK(g.num_patients() == 300);
  CHECK(g.num_caregivers() == 40);
  doubles = 0;
  for (const Patient& p : g.patients) doubles += p.is_double() ? 1 : 0;
  CHECK(doubles == 100);
}

TEST_CASE("generator is deterministic per seed") {
  const std::string one = serialize_instance(generate_instance(subset_spec('B', 42)));
  const std::string two = serialize_instance(generate_instance(subset_spec('B', 42)));
  const std::string other = serialize_instance(generate_instance(subset_spec('B', 43)));
  CHECK(one == two);
  CHECK(one != other);
}

TEST_CASE("generated instances satisfy every invariant") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    GenSpec spec;
    spec.num_patients = 1 + static_cast<int>(rng.next_int(0, 30));
    spec.num_caregivers = 1 + static_cast<int>(rng.next_int(0, 7));
    spec.seed = rng.next_u64();
    const Instance inst = generate_instance(spec);
    CHECK_NOTHROW(inst.check_invariants());
    for (const Patient& p : inst.patients) {
      if (!p.is_double()) continue;
      if (p.is_simultaneous()) {
        CHECK(p.sep_min == 0);
        CHECK(p.sep_max == 0);
      } else {
        CHECK(p.sep_min > 0);
        CHECK(p.sep_min <= p.sep_max);
      }
    }
  }
}

TEST_CASE("euclidean travel matches hand values") {
  const TravelMatrix m = euclidean_travel({{0, 0}, {3, 4}});
  CHECK(m(0, 1) == 5.0);
  CHECK(m(1, 0) == 5.0);
  CHECK(m(0, 0) == 0.0);

  const TravelMatrix single = euclidean_travel({{7, 9}});
  CHECK(single.size() == 1);
  CHECK(single(0, 0) == 0.0);
}

TEST_CASE("euclidean travel is symmetric and triangular") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<double, double>> pts;
    const int n = 2 + static_cast<int>(rng.next_int(0, 8));
    for (int i = 0; i < n; ++i)
      pts.emplace_back(static_cast<double>(rng.next_int(0, 100)),
                       static_cast<double>(rng.next_int(0, 100)));
    const TravelMatrix m = euclidean_travel(pts);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(m(i, j) == m(j, i));
    for (int t = 0; t < 20; ++t) {
      const int i = static_cast<int>(rng.next_index(pts.size()));
      const int j = static_cast<int>(rng.next_index(pts.size()));
      const int k = static_cast<int>(rng.next_index(pts.size()));
      CHECK(m(i, k) <= m(i, j) + m(j, k) + 1e-9);
    }
  }
}

TEST_CASE("parsers reject mangled input without crashing") {
  const std::string base = serialize_instance(generate_instance(subset_spec('A', 2)));
  Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text = base;
    const int mode = static_cast<int>(rng.next_int(0, 2));
    if (mode == 0 && !text.empty()) {
      // flip a random byte
      text[rng.next_index(text.size())] =
          static_cast<char>(rng.next_int(32, 126));
    } else if (mode == 1) {
      // truncate
      text.resize(rng.next_index(text.size()));
    } else {
      // drop a random line
      std::vector<std::string> lines;
      std::istringstream in(text);
      std::string line;
      while (std::getline(in, line)) lines.push_back(line);
      lines.erase(lines.begin() +
                  static_cast<long>(rng.next_index(lines.size())));
      std::ostringstream out;
      for (const std::string& l : lines) out << l << "\n";
      text = out.str();
    }
    std::istringstream in(text);
    try {
      const Instance inst = parse_instance(in);  // surviving is fine
      inst.check_invariants();
    } catch (const ParseError&) {
    } catch (const std::invalid_argument&) {
    }
  }
}

TEST_CASE("legacy layout reader extracts the same model") {
  const std::string text =
      "nbNodes 3\n"
      "nbVehi 2\n"
      "nbServi 6\n"
      "r\n"
      "0 0 0 0 0 0\n"
      "1 0 0 0 0 0\n"
      "1 0 0 1 0 0\n"
      "DS 3\n"
      "a\n"
      "1 1 1 0 0 0\n"
      "0 0 0 1 1 1\n"
      "x 0 10 20\n"
      "y 0 0 0\n"
      "d\n"
      "0 10 20\n"
      "10 0 10\n"
      "20 10 0\n"
      "p\n"
      "0 0 0 0 0 0\n"
      "12 0 0 0 0 0\n"
      "14 0 0 15 0 0\n"
      "mind 0 0 5\n"
      "maxd 0 0 25\n"
      "e 0 30 60\n"
      "l 0 150 180\n";
  std::istringstream in(text);
  const Instance inst = parse_instance(in, InstanceFormat::legacy);
  CHECK(inst.num_patients() == 2);
  CHECK(inst.num_caregivers() == 2);
  CHECK(inst.patient(1).demands.size() == 1);
  CHECK(inst.patient(2).is_double());
  CHECK(inst.patient(2).sep_min == 5);
  CHECK(inst.patient(2).sep_max == 25);
  CHECK(inst.patient(2).duration_of(4) == 15);
  CHECK(inst.travel_time(1, 2) == 10);
  CHECK(inst.caregiver(2).has_skill(5));
}
