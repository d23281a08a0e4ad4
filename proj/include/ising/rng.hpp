#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ising {

/// splitmix64-style mix; derives independent stream seeds from a root seed.
inline std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// mt19937_64 with explicit uniform/normal conversions. The engine's output
/// sequence is fixed by the standard; the conversions below avoid
/// std::*_distribution, whose output is implementation-defined, so streams
/// are reproducible byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in (0, 1].
  double uniform() {
    return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal, Box-Muller; produced in pairs.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Uniform index in [0, n); n must be positive. Modulo bias is < n / 2^64.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(eng_() % n);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ising
