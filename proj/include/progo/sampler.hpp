#ifndef PROGO_SAMPLER_HPP_
#define PROGO_SAMPLER_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "progo/objectives.hpp"
#include "progo/rng.hpp"

namespace progo {

using LogTarget = std::function<double(std::span<const double>)>;

// Latent slice sampler state: the current point, the log of the slice
// level, and the latent bracket variables (per-dimension widths s and
// anchors l).
//
// The slice level w is held as the pair (base, offset) with
// log w = log_level_base + log_level_offset, where base is log_target at
// the point the level was drawn from and offset = log(u) < 0. The slice
// test compares log_target(proposal) - base against offset. Summing the
// pair would destroy it: the optimizer drives |log_target| to k-scale
// magnitudes (1e13 and beyond) where one ulp exceeds |log u|, and a level
// stored as a single double becomes indistinguishable from the density at
// the current point, which can wedge the shrinkage loop permanently.
// Differences of nearby targets stay exact at any magnitude.
//
// Invariants maintained by every operation here:
//   log_level_offset < 0             (so w < target(x) strictly)
//   widths[j] > 0
//   widths[j] >= 2 |anchors[j] - x[j]|   (x lies inside l +/- s/2)
struct LssState {
  Point x;
  double log_level_base = 0.0;
  double log_level_offset = 0.0;
  std::vector<double> widths;
  std::vector<double> anchors;

  // log of the slice level; diagnostic only (see above).
  double log_w() const { return log_level_base + log_level_offset; }
};

struct LssConfig {
  double beta = 20.0;               // scale of the Gamma(2, beta) width prior
  std::size_t max_shrink_steps = 1000;
  std::size_t burn_in = 20;
  std::size_t sample_count = 200;

  void validate() const {
    if (!(beta > 0.0)) throw std::invalid_argument("LssConfig: beta must be > 0");
    if (max_shrink_steps < 1)
      throw std::invalid_argument("LssConfig: max_shrink_steps must be >= 1");
    if (sample_count < 1)
      throw std::invalid_argument("LssConfig: sample_count must be >= 1");
  }
};

// Shrinkage failed to accept within cfg.max_shrink_steps proposals. The
// bracket always contains the current point and strictly shrinks, so this
// indicates a numerical pathology, not slow mixing. Carries the state for
// diagnostics.
class non_termination_error : public std::runtime_error {
 public:
  non_termination_error(std::string what, LssState state)
      : std::runtime_error(std::move(what)), state_(std::move(state)) {}
  const LssState& state() const { return state_; }

 private:
  LssState state_;
};

// Draw the initial slice level, widths (Gamma(2, beta)) and anchors for a
// chain started at x0. log_target(x0) must be finite.
LssState init_state(const LogTarget& log_target, const Point& x0,
                    const LssConfig& cfg, Rng& rng);

// One rejection's bracket update: each coordinate edge moves to the
// rejected proposal, on whichever side of the current point it lies.
// Requires a[j] <= current[j] <= b[j] and proposal inside [a, b]; a
// violation is a sampler bug and throws std::logic_error.
void shrink(std::vector<double>& a, std::vector<double>& b,
            std::span<const double> proposal, std::span<const double> current);

struct LssStepResult {
  LssState state;
  std::uint64_t target_evals = 0;  // log_target calls consumed by this step
};

// One full Gibbs sweep: sample x uniformly from the slice by shrinkage,
// then refresh the slice level, widths and anchors.
LssStepResult lss_step(const LssState& state, const LogTarget& log_target,
                       const LssConfig& cfg, Rng& rng);

struct LssSampleResult {
  std::vector<Point> points;       // the cfg.sample_count post-burn-in x's
  std::uint64_t target_evals = 0;  // including the initialization call
};

LssSampleResult lss_sample(const LogTarget& log_target, const Point& x0,
                           const LssConfig& cfg, Rng& rng);

}  // namespace progo

#endif  // PROGO_SAMPLER_HPP_
