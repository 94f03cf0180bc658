#ifndef PROGO_RNG_HPP_
#define PROGO_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace progo {

// Seedable random stream. All stochastic code in this project draws from
// this class only, and every draw is derived from the raw 64-bit engine
// output by fixed arithmetic, so a run is reproducible from its seed on
// any platform (std::*_distribution would not guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1); safe to pass to log().
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double exponential(double scale) { return -scale * std::log(uniform_open()); }

  // Gamma with shape 2: sum of two independent exponentials.
  double gamma_shape2(double scale) {
    return exponential(scale) + exponential(scale);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace progo

#endif  // PROGO_RNG_HPP_
