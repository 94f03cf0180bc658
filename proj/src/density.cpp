#include "progo/density.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "progo/errors.hpp"

namespace progo {

Prior uniform_prior(const BoxDomain& box) {
  const double log_dens = -box.log_volume();
  auto log_density = [box, log_dens](std::span<const double> x) {
    return box.contains(x) ? log_dens
                           : -std::numeric_limits<double>::infinity();
  };
  auto sample = [box](Rng& rng) {
    Point x(box.dim());
    for (std::size_t j = 0; j < box.dim(); ++j) {
      x[j] = rng.uniform(box.lower[j], box.upper[j]);
    }
    return x;
  };
  return Prior{std::move(log_density), std::move(sample), box};
}

NascentDensity::NascentDensity(Objective objective, Prior prior, double k)
    : objective_(std::move(objective)), prior_(std::move(prior)), k_(k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("NascentDensity: k must be finite and >= 0 (got " +
                                std::to_string(k) + ")");
  }
  if (prior_.support.dim() != objective_.dim()) {
    throw std::invalid_argument(
        "NascentDensity: prior support and objective dimension differ");
  }
}

double NascentDensity::log_unnorm(std::span<const double> x) const {
  const double lp = prior_.log_density(x);
  if (lp == -std::numeric_limits<double>::infinity()) return lp;
  const double fv = objective_(x);
  if (!std::isfinite(fv)) {
    throw evaluation_error("NascentDensity: objective '" + objective_.name() +
                               "' returned a non-finite value",
                           Point(x.begin(), x.end()));
  }
  return -k_ * fv + lp;
}

}  // namespace progo
