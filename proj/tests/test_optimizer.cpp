#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "progo/errors.hpp"
#include "progo/optimizer.hpp"

using namespace progo;

TEST_CASE("k_schedule") {
  CHECK(k_schedule(5.0, 0) == 5.0);
  CHECK(k_schedule(5.0, 1) == doctest::Approx(5.0 * std::numbers::e).epsilon(1e-15));
  CHECK(k_schedule(5.0, 1) == doctest::Approx(13.59141).epsilon(1e-6));
  CHECK(k_schedule(1.0, 3) ==
        doctest::Approx(std::exp(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(k_schedule(0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(k_schedule(-2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(k_schedule(5.0, 1000), schedule_overflow_error);
}

TEST_CASE("select_stage_best") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  const NascentDensity nd(obj, prior, 3.0);

  // f(1.756) < f(4.0) < f(0.0): the density maximizer is the f minimizer.
  const std::vector<Point> samples = {{0.0}, {1.756}, {4.0}};
  CHECK(select_stage_best(samples, nd) == Point{1.756});

  CHECK(select_stage_best({{2.5}}, nd) == Point{2.5});
  CHECK_THROWS_AS(select_stage_best({}, nd), std::invalid_argument);

  // Ties break to the lowest index.
  const std::vector<Point> tied = {{1.0}, {1.0}, {0.5}};
  const NascentDensity flat(
      Objective("c", 1, obj.bounds(), [](std::span<const double>) { return 1.0; }),
      prior, 2.0);
  CHECK(select_stage_best(tied, flat) == Point{1.0});
}

TEST_CASE("stage best equals the f-argmin under a uniform prior") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  Rng rng(404);
  for (double k : {0.5, 4.0, 60.0}) {
    const NascentDensity nd(obj, prior, k);
    std::vector<Point> samples;
    for (int i = 0; i < 100; ++i) samples.push_back({rng.uniform(0.0, 5.0)});
    const Point best = select_stage_best(samples, nd);
    std::size_t am = 0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
      if (obj(samples[i]) < obj(samples[am])) am = i;
    }
    CHECK(best == samples[am]);
  }
}

TEST_CASE("optimize on demo1d finds the published optimum") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  ProgoConfig cfg;
  cfg.max_iters = 30;
  cfg.seed = 9001;
  const RunRecord rec = optimize(obj, prior, cfg);
  CHECK(std::fabs(rec.best_f - 0.353) < 1e-3);
  CHECK(std::fabs(rec.best_x[0] - 1.756) < 1e-2);
  CHECK(rec.stages.size() == 30);
  CHECK(rec.total_evals > 0);
  CHECK_FALSE(rec.schedule_overflow);
}

TEST_CASE("incumbent is nonincreasing and k follows the schedule") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  ProgoConfig cfg;
  cfg.max_iters = 25;
  cfg.seed = 7;
  const RunRecord rec = optimize(obj, prior, cfg);
  REQUIRE(rec.stages.size() == 25);
  double k = cfg.k0;
  double prev_f = std::numeric_limits<double>::infinity();
  std::uint64_t prev_evals = 0;
  for (std::size_t t = 0; t < rec.stages.size(); ++t) {
    const StageRecord& st = rec.stages[t];
    CHECK(st.iter == t + 1);
    CHECK(st.k == k);
    CHECK(st.incumbent_f <= prev_f);
    CHECK(st.incumbent_f <= st.stage_best_f);
    CHECK(st.cumulative_evals > prev_evals);
    prev_f = st.incumbent_f;
    prev_evals = st.cumulative_evals;
    k *= std::numbers::e;
  }
  CHECK(rec.best_f == rec.stages.back().incumbent_f);
}

TEST_CASE("optimize is deterministic given the seed") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  ProgoConfig cfg;
  cfg.max_iters = 12;
  cfg.seed = 321;
  const RunRecord a = optimize(obj, prior, cfg);
  const RunRecord b = optimize(obj, prior, cfg);
  REQUIRE(a.stages.size() == b.stages.size());
  CHECK(a.best_f == b.best_f);
  CHECK(a.best_x == b.best_x);
  CHECK(a.total_evals == b.total_evals);
  for (std::size_t t = 0; t < a.stages.size(); ++t) {
    CHECK(a.stages[t].incumbent_x == b.stages[t].incumbent_x);
    CHECK(a.stages[t].stage_best_x == b.stages[t].stage_best_x);
    CHECK(a.stages[t].cumulative_evals == b.stages[t].cumulative_evals);
  }

  ProgoConfig other = cfg;
  other.seed = 322;
  const RunRecord c = optimize(obj, prior, other);
  CHECK(c.total_evals != a.total_evals);
}

TEST_CASE("optimize on ackley d=2 reaches machine-precision scale") {
  const Objective obj = ackley(2);
  const Prior prior = uniform_prior(obj.bounds());
  ProgoConfig cfg;
  cfg.max_iters = 50;
  cfg.seed = 7;
  const RunRecord rec = optimize(obj, prior, cfg);
  CHECK(rec.best_f < std::exp(-10.0));
  CHECK(rec.best_f >= 0.0);
  CHECK(rec.total_evals == rec.stages.back().cumulative_evals);
}

TEST_CASE("schedule overflow stops the run early and flags the record") {
  Objective flat("flat", 1, BoxDomain::cube(1, 0.0, 1.0),
                 [](std::span<const double>) { return 1.0; });
  const Prior prior = uniform_prior(flat.bounds());
  ProgoConfig cfg;
  cfg.k0 = 1e300;  // overflows after ~20 e-foldings
  cfg.max_iters = 40;
  cfg.lss.sample_count = 5;
  cfg.lss.burn_in = 1;
  cfg.seed = 2;
  const RunRecord rec = optimize(flat, prior, cfg);
  CHECK(rec.schedule_overflow);
  CHECK(rec.stages.size() < 40);
  CHECK(rec.stages.size() >= 1);
  for (const StageRecord& st : rec.stages) CHECK(std::isfinite(st.k));
}

TEST_CASE("sampler failure aborts with the partial record attached") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  ProgoConfig cfg;
  cfg.max_iters = 5;
  cfg.lss.max_shrink_steps = 1;  // first out-of-box proposal kills the step
  cfg.seed = 3;
  CHECK_THROWS_AS(optimize(obj, prior, cfg), run_abort_error);
  try {
    optimize(obj, prior, cfg);
  } catch (const run_abort_error& e) {
    CHECK(e.partial_record().stages.size() < 5);
    CHECK(std::string(e.what()).find("stage") != std::string::npos);
  }
}

TEST_CASE("constant objective: incumbent equals the constant from stage 1") {
  Objective flat("flat", 2, BoxDomain::cube(2, 0.0, 1.0),
                 [](std::span<const double>) { return 3.5; });
  const Prior prior = uniform_prior(flat.bounds());
  ProgoConfig cfg;
  cfg.max_iters = 5;
  cfg.lss.sample_count = 20;
  cfg.lss.burn_in = 2;
  cfg.seed = 5;
  const RunRecord rec = optimize(flat, prior, cfg);
  REQUIRE(rec.stages.size() == 5);
  for (const StageRecord& st : rec.stages) {
    CHECK(st.incumbent_f == 3.5);
    CHECK(st.stage_best_f == 3.5);
  }
}

TEST_CASE("warm start and cold start both run; cold start stays valid") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  ProgoConfig cfg;
  cfg.max_iters = 10;
  cfg.seed = 88;
  cfg.warm_start = false;
  const RunRecord cold = optimize(obj, prior, cfg);
  CHECK(cold.stages.size() == 10);
  double prev = std::numeric_limits<double>::infinity();
  for (const StageRecord& st : cold.stages) {
    CHECK(st.incumbent_f <= prev);
    prev = st.incumbent_f;
  }
  cfg.warm_start = true;
  const RunRecord warm = optimize(obj, prior, cfg);
  CHECK(std::fabs(warm.best_f - 0.353) < 2e-3);
}

TEST_CASE("stage mean objective decreases across early stages (10 seeds)") {
  // Population-mean trend over the sharpening schedule, averaged over
  // seeds; not monotone per seed.
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  double avg_first = 0.0, avg_last = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Rng rng(seed);
    Point start = prior.sample(rng);
    double k = 5.0;
    for (int t = 1; t <= 10; ++t) {
      const NascentDensity nd(obj, prior, k);
      const LogTarget target = [&nd](std::span<const double> x) {
        return nd.log_unnorm(x);
      };
      LssConfig lss;
      const LssSampleResult res = lss_sample(target, start, lss, rng);
      double mean_f = 0.0;
      for (const Point& p : res.points) mean_f += obj(p);
      mean_f /= static_cast<double>(res.points.size());
      if (t == 1) avg_first += mean_f;
      if (t == 10) avg_last += mean_f;
      start = select_stage_best(res.points, nd);
      k *= std::numbers::e;
    }
  }
  CHECK(avg_last / 10.0 < avg_first / 10.0);
}

TEST_CASE("random search baseline") {
  const Objective obj = ackley(2);
  Rng rng(3);
  const RunRecord one = random_search_baseline(obj, 1, rng);
  REQUIRE(one.stages.size() == 1);
  CHECK(one.stages[0].incumbent_f == one.stages[0].stage_best_f);
  CHECK(std::isnan(one.stages[0].k));

  Rng rng2(4);
  const RunRecord rec = random_search_baseline(obj, 10000, rng2);
  CHECK(rec.total_evals == 10000);
  CHECK(rec.best_f > 0.0);  // continuous draws never hit the singleton optimum
  double prev = std::numeric_limits<double>::infinity();
  for (const StageRecord& st : rec.stages) {
    CHECK(st.incumbent_f <= prev);
    prev = st.incumbent_f;
    CHECK(obj.bounds().contains(st.stage_best_x));
  }

  Rng rng3(5);
  const RunRecord strided = random_search_baseline(obj, 1000, rng3, 100);
  CHECK(strided.stages.size() == 10);
  CHECK(strided.stages.back().cumulative_evals == 1000);

  Rng rng4(6);
  CHECK_THROWS_AS(random_search_baseline(obj, 0, rng4), std::invalid_argument);
}

TEST_CASE("config validation") {
  ProgoConfig cfg;
  cfg.k0 = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = ProgoConfig{};
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_NOTHROW(ProgoConfig{}.validate());
}

TEST_CASE("dimension mismatch between objective and prior") {
  const Objective obj = ackley(3);
  const Prior prior = uniform_prior(BoxDomain::cube(2, -20.0, 20.0));
  ProgoConfig cfg;
  Rng rng(1);
  CHECK_THROWS_AS(optimize(obj, prior, cfg, rng), std::invalid_argument);
}
