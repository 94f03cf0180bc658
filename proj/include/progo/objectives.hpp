#ifndef PROGO_OBJECTIVES_HPP_
#define PROGO_OBJECTIVES_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace progo {

using Point = std::vector<double>;

// Axis-aligned box in R^d with lower[j] < upper[j] and finite bounds.
struct BoxDomain {
  std::vector<double> lower;
  std::vector<double> upper;

  BoxDomain(std::vector<double> lo, std::vector<double> hi);
  static BoxDomain cube(std::size_t dim, double lo, double hi);

  std::size_t dim() const { return lower.size(); }
  bool contains(std::span<const double> x) const;
  // sum_j log(upper[j] - lower[j])
  double log_volume() const;
};

// A deterministic scalar function on a box, with optional ground-truth
// optimum metadata used by regret computation and acceptance checks.
//
// When known_min_value is set, every evaluation is checked against it:
// a value below known_min_value - min_value_slack means the metadata is
// wrong and evaluation throws. min_value_slack absorbs the rounding of
// optima quoted to a few decimals.
class Objective {
 public:
  using EvalFn = std::function<double(std::span<const double>)>;

  Objective(std::string name, std::size_t dim, BoxDomain bounds, EvalFn eval);

  double operator()(std::span<const double> x) const;

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const BoxDomain& bounds() const { return bounds_; }
  std::optional<double> known_min_value() const { return known_min_value_; }
  const std::optional<Point>& known_minimizer() const { return known_minimizer_; }
  double min_value_slack() const { return min_value_slack_; }

  Objective& with_known_minimum(double f_star, Point x_star,
                                double slack = 1e-12);

 private:
  std::string name_;
  std::size_t dim_;
  BoxDomain bounds_;
  EvalFn eval_;
  std::optional<double> known_min_value_;
  std::optional<Point> known_minimizer_;
  double min_value_slack_ = 1e-12;
};

// d-dimensional Ackley function on [-20, 20]^d, minimum 0 at the origin.
// Uses the standard parameters a=20, b=0.2, c=2*pi.
Objective ackley(std::size_t dim);

// d-dimensional Levy function on [-7.5, 7.5]^d, minimum 0 at (1, ..., 1).
Objective levy(std::size_t dim);

// f(x) = cos(x^2) + x/5 + 1 on [0, 5]. Three local minima; the global one
// is 0.353 at x = 1.756 (both quoted to three decimals, and stored as such;
// min_value_slack covers the rounding).
Objective demo1d();

// -f. The known-minimum metadata cannot be carried over (the minimum of -f
// is the unknown maximum of f), so it is cleared.
Objective negate(const Objective& obj);

// log(f). Requires f > 0 on the box; evaluation at a point with f <= 0
// throws evaluation_error carrying that point. Preserves the minimizer and
// maps a known minimum value through log.
Objective log_transform(const Objective& obj);

// Registry for CLI lookup.
const std::vector<std::string>& objective_names();
// dim = 0 means "the objective's natural dimension" (only demo1d has one).
// Unknown name or incompatible dim -> std::invalid_argument.
Objective make_objective(const std::string& name, std::size_t dim);

// sin(pi * x) with exact argument reduction, so that sinpi(n) == 0 for
// integer n. Used by the Levy terms that vanish at the optimum.
double sinpi(double x);

}  // namespace progo

#endif  // PROGO_OBJECTIVES_HPP_
