#ifndef PROGO_DENSITY_HPP_
#define PROGO_DENSITY_HPP_

#include <functional>
#include <span>

#include "progo/objectives.hpp"
#include "progo/rng.hpp"

namespace progo {

// Proper probability density with full support on its box, exposed as a
// log-density plus a direct sampler. log_density returns -infinity outside
// the support; the sampler never produces such points.
struct Prior {
  using LogDensityFn = std::function<double(std::span<const double>)>;
  using SampleFn = std::function<Point(Rng&)>;

  LogDensityFn log_density;
  SampleFn sample;
  BoxDomain support;
};

// Uniform prior on a box: constant log-density -log|box| inside, -infinity
// outside, coordinates sampled independently.
Prior uniform_prior(const BoxDomain& box);

// The sharpened density  m_k(x) proportional to exp(-k f(x)) pi(x),  held
// unnormalized and in the log domain throughout: at the k values the
// optimizer reaches, exp(-k f) underflows long before -k f stops being
// representable. The normalizing constant is never needed by the sampler;
// the oracle module integrates it numerically when a check requires it.
class NascentDensity {
 public:
  NascentDensity(Objective objective, Prior prior, double k);

  // -k f(x) + log pi(x); -infinity iff x is outside the prior support
  // (f is not evaluated there). Non-finite f -> evaluation_error.
  double log_unnorm(std::span<const double> x) const;

  double k() const { return k_; }
  const Objective& objective() const { return objective_; }
  const Prior& prior() const { return prior_; }

 private:
  Objective objective_;
  Prior prior_;
  double k_;
};

}  // namespace progo

#endif  // PROGO_DENSITY_HPP_
