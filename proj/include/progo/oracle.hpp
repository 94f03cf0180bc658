#ifndef PROGO_ORACLE_HPP_
#define PROGO_ORACLE_HPP_

#include <span>
#include <string>
#include <vector>

#include "progo/density.hpp"

namespace progo {

// Numerical validation of the theory on one-dimensional problems, kept
// deliberately independent of the sampler and optimizer code paths: the
// only shared kernel is objective/density evaluation, so agreement between
// the two routes is evidence rather than tautology.
//
// Quadrature is composite Simpson on a uniform grid, with log-sum-exp
// accumulation where the integrand is exp(log_unnorm): at large k the
// unnormalized density spans hundreds of orders of magnitude.

struct QuadratureGrid {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t panels = 20000;  // must be even

  void validate() const;
  double step() const { return (hi - lo) / static_cast<double>(panels); }
};

// One validation result, serializable as a report line.
struct CheckReport {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  std::string to_line() const;
};

// log of the normalizing integral of nd over the grid. Requires dim == 1.
double quad_normalizer(const NascentDensity& nd, const QuadratureGrid& grid);

// Mean and variance of f under the normalized density m_k.
double quad_mean_f(const NascentDensity& nd, const QuadratureGrid& grid);
double quad_var_f(const NascentDensity& nd, const QuadratureGrid& grid);

// d(mean)/dk by central difference against -Var_k(f). h <= 0 selects the
// default 1e-4 * max(1, k). pass iff the relative error is below tolerance.
CheckReport check_derivative_identity(const Objective& obj, const Prior& prior,
                                      double k, const QuadratureGrid& grid,
                                      double h = 0.0, double tolerance = 1e-3);

// d(log m_k(x))/dk by central difference (normalizer included) against
// mean_k(f) - f(x).
CheckReport check_dlog_identity(const NascentDensity& nd, double x,
                                const QuadratureGrid& grid, double h = 0.0,
                                double tolerance = 1e-3);

// CDF of the normalized density, tabulated at every other grid node by
// cumulative Simpson and scaled so the last entry is exactly 1.
struct CdfTable {
  std::vector<double> x;
  std::vector<double> cdf;

  double value(double q) const;    // linear interpolation, clamped to [0,1]
  double inverse(double p) const;  // quantile by table inversion
};

CdfTable quad_cdf(const NascentDensity& nd, const QuadratureGrid& grid);

// Kolmogorov-Smirnov distance between the sample set and the tabulated CDF.
double ks_distance(std::vector<double> samples, const CdfTable& table);

// Sharpening behavior across a k ladder: the normalized density at x_bad
// decays, the density ratio good/bad grows, and at k = 0 the density
// reduces to the (normalized) prior.
std::vector<CheckReport> check_limit_behavior(const Objective& obj,
                                              const Prior& prior,
                                              const QuadratureGrid& grid,
                                              double x_good, double x_bad,
                                              std::span<const double> ks);

}  // namespace progo

#endif  // PROGO_ORACLE_HPP_
