#include "progo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace progo {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_1d(const NascentDensity& nd, const char* where) {
  if (nd.objective().dim() != 1) {
    throw std::invalid_argument(std::string(where) +
                                ": quadrature supports dim == 1 only");
  }
}

// Simpson weight for node i of n+1 nodes: 1 4 2 4 ... 4 1.
double simpson_weight(std::size_t i, std::size_t n) {
  if (i == 0 || i == n) return 1.0;
  return (i % 2 == 1) ? 4.0 : 2.0;
}

struct NodeValues {
  std::vector<double> x;       // n+1 nodes
  std::vector<double> log_u;   // log_unnorm at each node
  std::vector<double> f;       // objective at each node
  double log_max = kNegInf;    // max of log_u
};

NodeValues evaluate_nodes(const NascentDensity& nd, const QuadratureGrid& grid) {
  grid.validate();
  const std::size_t n = grid.panels;
  const double h = grid.step();
  NodeValues nv;
  nv.x.resize(n + 1);
  nv.log_u.resize(n + 1);
  nv.f.resize(n + 1);
  double pt[1];
  for (std::size_t i = 0; i <= n; ++i) {
    // Endpoints hit exactly so the closed-box prior stays in support.
    nv.x[i] = (i == n) ? grid.hi : grid.lo + h * static_cast<double>(i);
    pt[0] = nv.x[i];
    nv.log_u[i] = nd.log_unnorm(pt);
    nv.f[i] = nd.objective()(pt);
    nv.log_max = std::max(nv.log_max, nv.log_u[i]);
  }
  if (!std::isfinite(nv.log_max)) {
    throw std::invalid_argument(
        "quadrature: density is zero on the whole grid");
  }
  return nv;
}

// Sum of w_i * exp(log_u_i - log_max) * g_i over all nodes.
double weighted_sum(const NodeValues& nv,
                    const std::vector<double>* g = nullptr) {
  const std::size_t n = nv.x.size() - 1;
  double s = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (nv.log_u[i] == kNegInf) continue;
    double term = simpson_weight(i, n) * std::exp(nv.log_u[i] - nv.log_max);
    if (g) term *= (*g)[i];
    s += term;
  }
  return s;
}

}  // namespace

void QuadratureGrid::validate() const {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("QuadratureGrid: need finite lo < hi");
  }
  if (panels < 2 || panels % 2 != 0) {
    throw std::invalid_argument("QuadratureGrid: panel count must be even and >= 2");
  }
}

std::string CheckReport::to_line() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-40s computed=% .9e expected=% .9e tol=%.1e %s",
                name.c_str(), computed, expected, tolerance,
                pass ? "PASS" : "FAIL");
  return std::string(buf);
}

double quad_normalizer(const NascentDensity& nd, const QuadratureGrid& grid) {
  require_1d(nd, "quad_normalizer");
  NodeValues nv = evaluate_nodes(nd, grid);
  const double s = weighted_sum(nv);
  return nv.log_max + std::log(s * grid.step() / 3.0);
}

double quad_mean_f(const NascentDensity& nd, const QuadratureGrid& grid) {
  require_1d(nd, "quad_mean_f");
  NodeValues nv = evaluate_nodes(nd, grid);
  return weighted_sum(nv, &nv.f) / weighted_sum(nv);
}

double quad_var_f(const NascentDensity& nd, const QuadratureGrid& grid) {
  require_1d(nd, "quad_var_f");
  NodeValues nv = evaluate_nodes(nd, grid);
  const double z = weighted_sum(nv);
  const double mu = weighted_sum(nv, &nv.f) / z;
  std::vector<double> dev_sq(nv.f.size());
  for (std::size_t i = 0; i < nv.f.size(); ++i) {
    const double d = nv.f[i] - mu;
    dev_sq[i] = d * d;
  }
  return weighted_sum(nv, &dev_sq) / z;
}

CheckReport check_derivative_identity(const Objective& obj, const Prior& prior,
                                      double k, const QuadratureGrid& grid,
                                      double h, double tolerance) {
  if (h <= 0.0) h = 1e-4 * std::max(1.0, k);
  const double mu_plus = quad_mean_f(NascentDensity(obj, prior, k + h), grid);
  const double mu_minus = quad_mean_f(NascentDensity(obj, prior, k - h), grid);
  const double fd = (mu_plus - mu_minus) / (2.0 * h);
  const double expected = -quad_var_f(NascentDensity(obj, prior, k), grid);

  CheckReport rep;
  rep.name = "dmu_dk_equals_minus_var(k=" + std::to_string(k) + ")";
  rep.computed = fd;
  rep.expected = expected;
  rep.tolerance = tolerance;
  const double scale = std::max(std::fabs(expected), 1e-12);
  rep.pass = std::fabs(fd - expected) / scale < tolerance;
  return rep;
}

CheckReport check_dlog_identity(const NascentDensity& nd, double x,
                                const QuadratureGrid& grid, double h,
                                double tolerance) {
  const double k = nd.k();
  if (h <= 0.0) h = 1e-4 * std::max(1.0, k);
  const double pt[1] = {x};

  auto log_norm_at = [&](double kk) {
    NascentDensity nk(nd.objective(), nd.prior(), kk);
    return nk.log_unnorm(pt) - quad_normalizer(nk, grid);
  };
  const double fd = (log_norm_at(k + h) - log_norm_at(k - h)) / (2.0 * h);
  const double expected = quad_mean_f(nd, grid) - nd.objective()(pt);

  CheckReport rep;
  rep.name = "dlogm_dk_equals_mean_minus_f(k=" + std::to_string(k) +
             ",x=" + std::to_string(x) + ")";
  rep.computed = fd;
  rep.expected = expected;
  rep.tolerance = tolerance;
  const double scale = std::max(std::fabs(expected), 1e-12);
  rep.pass = std::fabs(fd - expected) / scale < tolerance;
  return rep;
}

double CdfTable::value(double q) const {
  if (q <= x.front()) return 0.0;
  if (q >= x.back()) return 1.0;
  const auto it = std::upper_bound(x.begin(), x.end(), q);
  const std::size_t i = static_cast<std::size_t>(it - x.begin());
  const double t = (q - x[i - 1]) / (x[i] - x[i - 1]);
  return cdf[i - 1] + t * (cdf[i] - cdf[i - 1]);
}

double CdfTable::inverse(double p) const {
  if (p <= 0.0) return x.front();
  if (p >= 1.0) return x.back();
  const auto it = std::lower_bound(cdf.begin(), cdf.end(), p);
  std::size_t i = static_cast<std::size_t>(it - cdf.begin());
  if (i == 0) return x.front();
  const double span = cdf[i] - cdf[i - 1];
  const double t = span > 0.0 ? (p - cdf[i - 1]) / span : 1.0;
  return x[i - 1] + t * (x[i] - x[i - 1]);
}

CdfTable quad_cdf(const NascentDensity& nd, const QuadratureGrid& grid) {
  require_1d(nd, "quad_cdf");
  NodeValues nv = evaluate_nodes(nd, grid);
  const std::size_t n = grid.panels;
  const double h = grid.step();

  auto dens = [&](std::size_t i) {
    return nv.log_u[i] == kNegInf ? 0.0 : std::exp(nv.log_u[i] - nv.log_max);
  };

  CdfTable table;
  table.x.reserve(n / 2 + 1);
  table.cdf.reserve(n / 2 + 1);
  table.x.push_back(nv.x[0]);
  table.cdf.push_back(0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i + 2 <= n; i += 2) {
    acc += (h / 3.0) * (dens(i) + 4.0 * dens(i + 1) + dens(i + 2));
    table.x.push_back(nv.x[i + 2]);
    table.cdf.push_back(acc);
  }
  if (!(acc > 0.0)) {
    throw std::invalid_argument("quad_cdf: density integrates to zero");
  }
  for (double& c : table.cdf) c /= acc;
  // Cumulative Simpson can dip by rounding; force monotonicity.
  for (std::size_t i = 1; i < table.cdf.size(); ++i) {
    table.cdf[i] = std::max(table.cdf[i], table.cdf[i - 1]);
  }
  return table;
}

double ks_distance(std::vector<double> samples, const CdfTable& table) {
  if (samples.empty()) {
    throw std::invalid_argument("ks_distance: empty sample set");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double fi = table.value(samples[i]);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(fi - lo, hi - fi));
  }
  return d;
}

std::vector<CheckReport> check_limit_behavior(const Objective& obj,
                                              const Prior& prior,
                                              const QuadratureGrid& grid,
                                              double x_good, double x_bad,
                                              std::span<const double> ks) {
  if (ks.size() < 2) {
    throw std::invalid_argument("check_limit_behavior: need at least two k values");
  }
  const double good_pt[1] = {x_good};
  const double bad_pt[1] = {x_bad};

  std::vector<double> log_bad, log_ratio;
  for (double k : ks) {
    NascentDensity nd(obj, prior, k);
    const double log_z = quad_normalizer(nd, grid);
    log_bad.push_back(nd.log_unnorm(bad_pt) - log_z);
    log_ratio.push_back(nd.log_unnorm(good_pt) - nd.log_unnorm(bad_pt));
  }

  std::vector<CheckReport> reports;

  // m_k(x_bad) can rise while mu_k > f(x_bad) (d/dk log m_k = mu_k - f);
  // require endpoint decay plus monotone decay past the first ladder rung.
  CheckReport decay;
  decay.name = "m_k(x_bad)_decays";
  decay.computed = log_bad.back();
  decay.expected = log_bad.front();
  decay.tolerance = 0.0;
  decay.pass = log_bad.back() < log_bad.front() &&
               std::is_sorted(log_bad.rbegin(), log_bad.rend() - 1);
  reports.push_back(decay);

  CheckReport ratio;
  ratio.name = "density_ratio_good_over_bad_grows";
  ratio.computed = log_ratio.back();
  ratio.expected = log_ratio.front();
  ratio.tolerance = 0.0;
  ratio.pass = std::is_sorted(log_ratio.begin(), log_ratio.end()) &&
               log_ratio.back() > log_ratio.front();
  reports.push_back(ratio);

  // At k = 0 the normalized density is the prior restricted to the box.
  {
    NascentDensity nd0(obj, prior, 0.0);
    const double log_z = quad_normalizer(nd0, grid);
    double worst = 0.0;
    for (double q = 0.1; q < 1.0; q += 0.2) {
      const double pt[1] = {grid.lo + q * (grid.hi - grid.lo)};
      const double dens = std::exp(nd0.log_unnorm(pt) - log_z);
      const double prior_dens = std::exp(prior.log_density(pt));
      worst = std::max(worst, std::fabs(dens - prior_dens));
    }
    CheckReport base;
    base.name = "m_0_equals_prior";
    base.computed = worst;
    base.expected = 0.0;
    base.tolerance = 1e-10;
    base.pass = worst < 1e-10;
    reports.push_back(base);
  }

  return reports;
}

}  // namespace progo
