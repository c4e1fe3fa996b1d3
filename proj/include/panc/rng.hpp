#pragma once
// Counter-based random streams: every draw is a pure function of
// (seed, stream, counter), so results do not depend on thread scheduling.

#include <cmath>
#include <cstdint>

namespace panc {

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t sub = 0)
      : key_(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ sub)) {}

  std::uint64_t next_u64() { return splitmix64(key_ + 0x632be59bd9b4e019ULL * (++counter_)); }

  // Uniform on (0, 1] with 53 random bits.
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

  // Uniform on [0, 1).
  double uniform0() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal by Box-Muller; the second variate is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * 3.14159265358979323846 * uniform0();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  // Exponential with the given mean.
  double exponential(double mean) { return -mean * std::log(uniform()); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace panc
