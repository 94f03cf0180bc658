#ifndef PROGO_OPTIMIZER_HPP_
#define PROGO_OPTIMIZER_HPP_

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "progo/density.hpp"
#include "progo/sampler.hpp"

namespace progo {

struct ProgoConfig {
  double k0 = 5.0;
  std::size_t max_iters = 200;  // T
  LssConfig lss;
  // Start each stage's chain at the previous stage's best point. The
  // literal algorithm re-uses the same initial point for every stage,
  // which mixes poorly once the density has sharpened; warm_start=false
  // keeps that mode available for fidelity experiments.
  bool warm_start = true;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(k0 > 0.0)) throw std::invalid_argument("ProgoConfig: k0 must be > 0");
    if (max_iters < 1)
      throw std::invalid_argument("ProgoConfig: max_iters must be >= 1");
    lss.validate();
  }
};

struct StageRecord {
  std::size_t iter = 0;  // 1-based stage index
  double k = std::numeric_limits<double>::quiet_NaN();  // NaN for baselines
  Point incumbent_x;
  double incumbent_f = 0.0;
  Point stage_best_x;
  double stage_best_f = 0.0;
  std::uint64_t cumulative_evals = 0;
  std::chrono::milliseconds elapsed{0};
};

// Per-stage trajectory of one run plus the final incumbent. incumbent_f is
// nonincreasing in iter; every field except elapsed is a deterministic
// function of (objective, prior, config, seed).
struct RunRecord {
  std::vector<StageRecord> stages;
  Point best_x;
  double best_f = std::numeric_limits<double>::infinity();
  std::uint64_t total_evals = 0;
  bool schedule_overflow = false;  // stopped early at the last finite k
};

// A sampler stage failed; carries whatever the run had produced so far.
class run_abort_error : public std::runtime_error {
 public:
  run_abort_error(std::string what, RunRecord partial)
      : std::runtime_error(std::move(what)), partial_(std::move(partial)) {}
  const RunRecord& partial_record() const { return partial_; }

 private:
  RunRecord partial_;
};

// k0 * e^t, computed by t successive multiplications by e (the same
// arithmetic the optimizer's update loop performs).
double k_schedule(double k0, std::size_t t);

// The sample with the highest m_k log-density; ties broken by lowest index.
// Under a uniform prior this is the sample with the smallest f.
Point select_stage_best(const std::vector<Point>& samples,
                        const NascentDensity& nd);

// The full driver: for each stage, sharpen k by a factor of e, draw
// cfg.lss.sample_count points from m_k with the latent slice sampler, pick
// the stage best, and keep the running argmin of f across stages.
// Objective evaluations are counted exactly (every f call made through the
// density, the stage-best selection, or the incumbent update).
RunRecord optimize(const Objective& obj, const Prior& prior,
                   const ProgoConfig& cfg, Rng& rng);

// Convenience overload seeding the stream from cfg.seed.
RunRecord optimize(const Objective& obj, const Prior& prior,
                   const ProgoConfig& cfg);

// Uniform random search over the objective's box, recording the running
// argmin every record_every draws (and at the final draw). Comparison
// baseline only; k is NaN in every record.
RunRecord random_search_baseline(const Objective& obj,
                                 std::uint64_t budget_evals, Rng& rng,
                                 std::uint64_t record_every = 1);

}  // namespace progo

#endif  // PROGO_OPTIMIZER_HPP_
