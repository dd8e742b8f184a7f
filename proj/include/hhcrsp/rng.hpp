#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hhcrsp {

// Thin wrapper over mt19937_64. The engine itself is fully specified by the
// standard; the helpers below replace <random> distributions, whose output is
// implementation-defined, so seeded runs reproduce across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform real in [0, 1), 53 random bits.
  double next_real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], inclusive. Modulo bias is negligible for the
  // spans used here and keeps the draw count fixed.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }

  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(eng_() % n);
  }

  // k distinct values from [0, n), in draw order (Floyd's algorithm).
  std::vector<std::size_t> sample_distinct(std::size_t k, std::size_t n) {
    std::vector<std::size_t> picked;
    picked.reserve(k);
    for (std::size_t i = n - k; i < n; ++i) {
      std::size_t j = next_index(i + 1);
      bool seen = false;
      for (std::size_t v : picked) {
        if (v == j) {
          seen = true;
          break;
        }
      }
      picked.push_back(seen ? i : j);
    }
    return picked;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_index(i)]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hhcrsp
