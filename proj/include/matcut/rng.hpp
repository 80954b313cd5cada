#ifndef MATCUT_RNG_HPP
#define MATCUT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace matcut {

// Counter-based generator: every draw is a hash of (key, counter), so streams
// derived with derive() are independent and a run is reproducible from the
// seed alone regardless of evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed + kGolden * (stream + 1))) {}

  CounterRng derive(std::uint64_t stream) const { return CounterRng(key_, stream); }

  std::uint64_t next() { return mix(key_ + kGolden * ++counter_); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1].
  double uniform_positive() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Unbiased enough at desk scale; determinism is what matters here.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  double normal() {
    const double u1 = uniform_positive();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  std::vector<double> normal_vector(int dim) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = normal();
    return v;
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace matcut

#endif
