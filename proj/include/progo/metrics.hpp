#ifndef PROGO_METRICS_HPP_
#define PROGO_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

namespace progo {

// Log-scale optimality gaps. An exact hit (gap <= 0, possible once the
// optimizer lands within machine epsilon of the optimum, or when the stored
// optimum is a rounded literature value) maps to -infinity rather than an
// error; the CSV layer serializes that as the token "-inf".
struct RegretPoint {
  double r_f = 0.0;
  double r_m = 0.0;
};

// log(f_val - f_star), or -infinity when the gap is nonpositive.
inline double function_log_regret(double f_val, double f_star) {
  if (!std::isfinite(f_val) || !std::isfinite(f_star)) {
    throw std::invalid_argument("function_log_regret: inputs must be finite");
  }
  const double gap = f_val - f_star;
  if (gap <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(gap);
}

// log(||x_est - x_star|| / sqrt(d)) with the Euclidean norm, so a uniform
// per-coordinate offset of delta gives log|delta| regardless of d.
inline double minima_log_regret(std::span<const double> x_est,
                                std::span<const double> x_star) {
  if (x_est.size() != x_star.size() || x_est.empty()) {
    throw std::invalid_argument(
        "minima_log_regret: points must have equal positive length");
  }
  double amax = 0.0;
  for (std::size_t j = 0; j < x_est.size(); ++j) {
    amax = std::max(amax, std::fabs(x_est[j] - x_star[j]));
  }
  if (amax == 0.0) return -std::numeric_limits<double>::infinity();
  // Scale by the largest component so the squares cannot underflow.
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < x_est.size(); ++j) {
    const double r = (x_est[j] - x_star[j]) / amax;
    sum_sq += r * r;
  }
  const double d = static_cast<double>(x_est.size());
  return std::log(amax) + 0.5 * std::log(sum_sq / d);
}

}  // namespace progo

#endif  // PROGO_METRICS_HPP_
