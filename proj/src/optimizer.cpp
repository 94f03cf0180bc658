#include "progo/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "progo/errors.hpp"

namespace progo {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start);
}

// Same objective, but every evaluation bumps the shared counter. The
// counter must outlive the returned objective.
Objective counting_objective(const Objective& obj, std::uint64_t& counter) {
  auto inner = obj;
  Objective out(
      obj.name(), obj.dim(), obj.bounds(),
      [inner, &counter](std::span<const double> x) {
        ++counter;
        return inner(x);
      });
  if (obj.known_min_value() && obj.known_minimizer()) {
    out.with_known_minimum(*obj.known_min_value(), *obj.known_minimizer(),
                           obj.min_value_slack());
  }
  return out;
}

}  // namespace

double k_schedule(double k0, std::size_t t) {
  if (!(k0 > 0.0) || !std::isfinite(k0)) {
    throw std::invalid_argument("k_schedule: k0 must be finite and > 0");
  }
  double k = k0;
  for (std::size_t i = 0; i < t; ++i) k *= std::numbers::e;
  if (!std::isfinite(k)) {
    throw schedule_overflow_error("k_schedule: k0 * e^" + std::to_string(t) +
                                  " overflows");
  }
  return k;
}

Point select_stage_best(const std::vector<Point>& samples,
                        const NascentDensity& nd) {
  if (samples.empty()) {
    throw std::invalid_argument("select_stage_best: empty sample list");
  }
  std::size_t best = 0;
  double best_log = nd.log_unnorm(samples[0]);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    double l = nd.log_unnorm(samples[i]);
    if (l > best_log) {
      best_log = l;
      best = i;
    }
  }
  return samples[best];
}

RunRecord optimize(const Objective& obj, const Prior& prior,
                   const ProgoConfig& cfg, Rng& rng) {
  cfg.validate();
  if (prior.support.dim() != obj.dim()) {
    throw std::invalid_argument(
        "optimize: prior support and objective dimension differ");
  }

  const auto start_time = Clock::now();
  std::uint64_t evals = 0;
  const Objective counted = counting_objective(obj, evals);

  RunRecord rec;
  const Point x0 = prior.sample(rng);
  Point stage_start = x0;
  double k = cfg.k0;

  for (std::size_t t = 1; t <= cfg.max_iters; ++t) {
    if (!std::isfinite(k)) {
      rec.schedule_overflow = true;
      break;
    }
    NascentDensity nd(counted, prior, k);
    LogTarget target = [&nd](std::span<const double> x) {
      return nd.log_unnorm(x);
    };

    LssSampleResult stage;
    try {
      stage = lss_sample(target, stage_start, cfg.lss, rng);
    } catch (const non_termination_error& e) {
      rec.total_evals = evals;
      throw run_abort_error("optimize: sampler failed at stage " +
                                std::to_string(t) + ": " + e.what(),
                            std::move(rec));
    }

    Point stage_best = select_stage_best(stage.points, nd);
    const double stage_best_f = counted(stage_best);
    if (stage_best_f < rec.best_f) {
      rec.best_f = stage_best_f;
      rec.best_x = stage_best;
    }

    rec.stages.push_back(StageRecord{t, k, rec.best_x, rec.best_f, stage_best,
                                     stage_best_f, evals, since(start_time)});

    stage_start = cfg.warm_start ? std::move(stage_best) : x0;
    k *= std::numbers::e;
  }

  rec.total_evals = evals;
  return rec;
}

RunRecord optimize(const Objective& obj, const Prior& prior,
                   const ProgoConfig& cfg) {
  Rng rng(cfg.seed);
  return optimize(obj, prior, cfg, rng);
}

RunRecord random_search_baseline(const Objective& obj,
                                 std::uint64_t budget_evals, Rng& rng,
                                 std::uint64_t record_every) {
  if (budget_evals < 1) {
    throw std::invalid_argument("random_search_baseline: budget must be >= 1");
  }
  if (record_every < 1) record_every = 1;

  const auto start_time = Clock::now();
  const BoxDomain& box = obj.bounds();
  RunRecord rec;
  Point x(obj.dim());
  std::size_t iter = 0;
  for (std::uint64_t i = 1; i <= budget_evals; ++i) {
    for (std::size_t j = 0; j < box.dim(); ++j) {
      x[j] = rng.uniform(box.lower[j], box.upper[j]);
    }
    const double fx = obj(x);
    if (fx < rec.best_f) {
      rec.best_f = fx;
      rec.best_x = x;
    }
    if (i % record_every == 0 || i == budget_evals) {
      rec.stages.push_back(StageRecord{
          ++iter, std::numeric_limits<double>::quiet_NaN(), rec.best_x,
          rec.best_f, x, fx, i, since(start_time)});
    }
  }
  rec.total_evals = budget_evals;
  return rec;
}

}  // namespace progo
