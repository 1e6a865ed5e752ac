// rng.hpp - deterministic, platform-independent pseudo random generator.
//
// All randomness in the project (fold assignment, weight init, dropout,
// batch shuffling, synthetic test data) flows through this generator so that
// runs are bit-reproducible for a given seed. std::mt19937 engines are
// portable but the standard distributions are not, hence the hand-rolled
// uniform draws.
#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

namespace topofc {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // splitmix64 step
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53 random bits
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform integer in [0, n), n > 0 (Lemire reduction)
  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return next_double() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = next_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Stable seed derivation for parallel workers / folds: mixes the base seed
// with a stream index so sibling streams are decorrelated and reproducible.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  Rng mixer(base ^ (0x632be59bd9b4e019ULL * (stream + 1)));
  mixer.next_u64();
  return mixer.next_u64();
}

}  // namespace topofc
