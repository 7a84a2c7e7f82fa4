#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace mrta {

// Seeded RNG wrapper. std::mt19937_64 output is pinned by the standard, and
// all derived draws below avoid std::*_distribution (whose sequences are
// implementation-defined), so identical seeds give identical streams on
// every platform.
class RandomEngine {
 public:
  explicit RandomEngine(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform in [0, n) by rejection; unbiased.
  std::size_t next_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("next_index: n must be positive");
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % span);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_index(i)]);
    }
  }

  // k distinct indices drawn uniformly from [0, n).
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("sample_indices: k > n");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + next_index(n - i)]);
    }
    pool.resize(k);
    return pool;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mrta
