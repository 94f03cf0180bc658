#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "progo/oracle.hpp"
#include "progo/sampler.hpp"

using namespace progo;

namespace {

const QuadratureGrid kGrid{0.0, 5.0, 20000};

Objective constant_objective(double c) {
  return Objective("const", 1, BoxDomain::cube(1, 0.0, 5.0),
                   [c](std::span<const double>) { return c; });
}

}  // namespace

TEST_CASE("normalizer of a proper density at k=0 is log 1") {
  const Objective obj = constant_objective(3.0);
  const Prior prior = uniform_prior(obj.bounds());
  // k = 0: integrand is the prior itself, which integrates to one.
  const NascentDensity nd(obj, prior, 0.0);
  CHECK(quad_normalizer(nd, kGrid) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("normalizer is self-consistent under grid refinement") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  const QuadratureGrid fine{0.0, 5.0, 40000};
  for (double k : {1.0, 3.0, 9.0}) {
    const NascentDensity nd(obj, prior, k);
    const double a = quad_normalizer(nd, kGrid);
    const double b = quad_normalizer(nd, fine);
    CHECK(std::fabs(a - b) < 1e-10);
  }
}

TEST_CASE("normalizer respects the minimum-value upper bound") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  // log integral <= -k * min f, with the grid minimum standing in for f*.
  double f_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 5000; ++i) {
    f_min = std::min(f_min, obj(Point{5.0 * i / 5000.0}));
  }
  for (double k : {1.0, 9.0}) {
    const double log_z = quad_normalizer(NascentDensity(obj, prior, k), kGrid);
    CHECK(log_z <= -k * f_min + 1e-12);
    CHECK(std::isfinite(log_z));
  }
}

TEST_CASE("normalizer stays finite at a k that underflows exp") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  // exp(-k f) underflows at k f ~ 745; the log-sum-exp route must not.
  const NascentDensity nd(obj, prior, 5000.0);
  const double log_z = quad_normalizer(nd, kGrid);
  CHECK(std::isfinite(log_z));
  CHECK(log_z < -1000.0);
}

TEST_CASE("quadrature requires dim 1") {
  const Objective obj = ackley(2);
  const Prior prior = uniform_prior(obj.bounds());
  const NascentDensity nd(obj, prior, 1.0);
  CHECK_THROWS_AS(quad_normalizer(nd, kGrid), std::invalid_argument);
  CHECK_THROWS_AS(quad_mean_f(nd, kGrid), std::invalid_argument);
}

TEST_CASE("grid validation") {
  QuadratureGrid g{0.0, 5.0, 3};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g = {5.0, 0.0, 100};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g = {0.0, 5.0, 0};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("mean and variance of a constant function") {
  const Objective obj = constant_objective(4.25);
  const Prior prior = uniform_prior(obj.bounds());
  const NascentDensity nd(obj, prior, 0.0);
  CHECK(quad_mean_f(nd, kGrid) == doctest::Approx(4.25).epsilon(1e-13));
  CHECK(quad_var_f(nd, kGrid) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("mu_k decreases in k and approaches the minimum") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 9; ++k) {
    const double mu = quad_mean_f(NascentDensity(obj, prior, k), kGrid);
    CHECK(mu < prev - 1e-6);
    prev = mu;
  }
  const double mu50 = quad_mean_f(NascentDensity(obj, prior, 50.0), kGrid);
  CHECK(std::fabs(mu50 - 0.353) < 0.05);
  const double mu9 = quad_mean_f(NascentDensity(obj, prior, 9.0), kGrid);
  const double mu0 = quad_mean_f(NascentDensity(obj, prior, 0.0), kGrid);
  CHECK(mu9 - 0.353 < mu0 - 0.353);
}

TEST_CASE("derivative identity dmu/dk = -Var") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  for (double k : {1.0, 5.0}) {
    const CheckReport rep = check_derivative_identity(obj, prior, k, kGrid);
    CHECK(rep.pass);
    CHECK(std::fabs(rep.computed - rep.expected) <
          1e-3 * std::fabs(rep.expected));
  }
}

TEST_CASE("derivative identity for a constant function is 0 = 0") {
  const Objective obj = constant_objective(2.0);
  const Prior prior = uniform_prior(obj.bounds());
  const CheckReport rep = check_derivative_identity(obj, prior, 1.0, kGrid);
  CHECK(std::fabs(rep.computed) < 1e-12);
  CHECK(std::fabs(rep.expected) < 1e-12);
}

TEST_CASE("dlog identity d/dk log m_k(x) = mu - f(x)") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  const CheckReport rep =
      check_dlog_identity(NascentDensity(obj, prior, 2.0), 1.756, kGrid);
  CHECK(rep.pass);

  // At the level crossing f(x) = mu_k the derivative vanishes. Root-find
  // the crossing by bisection on [1.2, 1.756], where f passes through mu_2.
  const double k = 2.0;
  const double mu = quad_mean_f(NascentDensity(obj, prior, k), kGrid);
  double lo = 1.2, hi = 1.756;
  REQUIRE((obj(Point{lo}) - mu) * (obj(Point{hi}) - mu) < 0.0);
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((obj(Point{lo}) - mu) * (obj(Point{mid}) - mu) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double x_cross = 0.5 * (lo + hi);
  const CheckReport at_cross =
      check_dlog_identity(NascentDensity(obj, prior, k), x_cross, kGrid);
  CHECK(std::fabs(at_cross.expected) < 1e-9);
  CHECK(std::fabs(at_cross.computed) < 1e-3);
}

TEST_CASE("dlog identity for a constant function vanishes everywhere") {
  const Objective obj = constant_objective(2.0);
  const Prior prior = uniform_prior(obj.bounds());
  for (double x : {0.5, 2.5, 4.5}) {
    const CheckReport rep =
        check_dlog_identity(NascentDensity(obj, prior, 3.0), x, kGrid);
    CHECK(std::fabs(rep.computed) < 1e-9);
    CHECK(std::fabs(rep.expected) < 1e-12);
  }
}

TEST_CASE("cdf table is monotone from 0 to 1") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  const CdfTable table = quad_cdf(NascentDensity(obj, prior, 3.0), kGrid);
  REQUIRE(table.x.size() == table.cdf.size());
  CHECK(table.cdf.front() == 0.0);
  CHECK(table.cdf.back() == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 1; i < table.cdf.size(); ++i) {
    CHECK(table.cdf[i] >= table.cdf[i - 1]);
  }
  CHECK(table.value(-1.0) == 0.0);
  CHECK(table.value(6.0) == 1.0);
}

TEST_CASE("uniform density cdf is linear") {
  const Objective obj = constant_objective(1.0);
  const Prior prior = uniform_prior(obj.bounds());
  const CdfTable table = quad_cdf(NascentDensity(obj, prior, 0.0), kGrid);
  for (double q : {0.5, 1.25, 2.5, 4.0}) {
    CHECK(table.value(q) == doctest::Approx(q / 5.0).epsilon(1e-10));
  }
  CHECK(table.inverse(0.4) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("ks distance basics") {
  const Objective obj = constant_objective(1.0);
  const Prior prior = uniform_prior(obj.bounds());
  const CdfTable table = quad_cdf(NascentDensity(obj, prior, 0.0), kGrid);

  // A single sample at the median: one-point empirical CDF, distance 1/2.
  CHECK(ks_distance({2.5}, table) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_THROWS_AS(ks_distance({}, table), std::invalid_argument);
}

TEST_CASE("iid inverse-cdf draws pass the KS test at the 1% critical value") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  const CdfTable table = quad_cdf(NascentDensity(obj, prior, 3.0), kGrid);
  Rng rng(424242);
  std::vector<double> xs(5000);
  for (double& x : xs) x = table.inverse(rng.uniform());
  CHECK(ks_distance(xs, table) < 1.63 / std::sqrt(5000.0));
}

TEST_CASE("lss samples match the quadrature cdf of m_3") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  const NascentDensity nd(obj, prior, 3.0);
  const CdfTable table = quad_cdf(nd, kGrid);
  const LogTarget target = [&nd](std::span<const double> x) {
    return nd.log_unnorm(x);
  };
  LssConfig cfg;
  cfg.burn_in = 200;
  cfg.sample_count = 5000;
  Rng rng(5150);
  const LssSampleResult res = lss_sample(target, Point{1.756}, cfg, rng);
  std::vector<double> xs;
  for (const Point& p : res.points) xs.push_back(p[0]);
  CHECK(ks_distance(xs, table) < 0.05);
}

TEST_CASE("limit behavior reports") {
  const Objective obj = demo1d();
  const Prior prior = uniform_prior(obj.bounds());
  const double ks[] = {1.0, 3.0, 9.0, 27.0};
  const auto reports = check_limit_behavior(obj, prior, kGrid, 1.756, 4.0, ks);
  REQUIRE(reports.size() == 3);
  for (const CheckReport& rep : reports) {
    INFO(rep.to_line());
    CHECK(rep.pass);
  }
  // m_27(4.0) < m_1(4.0), both as normalized log densities.
  CHECK(reports[0].computed < reports[0].expected);
}

TEST_CASE("report line format carries pass and fail") {
  CheckReport rep;
  rep.name = "x";
  rep.computed = 1.0;
  rep.expected = 1.0;
  rep.tolerance = 1e-3;
  rep.pass = true;
  CHECK(rep.to_line().find("PASS") != std::string::npos);
  rep.pass = false;
  CHECK(rep.to_line().find("FAIL") != std::string::npos);
}
