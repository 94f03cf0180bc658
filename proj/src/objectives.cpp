#include "progo/objectives.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "progo/errors.hpp"

namespace progo {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

BoxDomain::BoxDomain(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  require(!lower.empty(), "BoxDomain: dimension must be at least 1");
  require(lower.size() == upper.size(), "BoxDomain: bound length mismatch");
  for (std::size_t j = 0; j < lower.size(); ++j) {
    require(std::isfinite(lower[j]) && std::isfinite(upper[j]),
            "BoxDomain: bounds must be finite");
    require(lower[j] < upper[j], "BoxDomain: lower must be < upper");
  }
}

BoxDomain BoxDomain::cube(std::size_t dim, double lo, double hi) {
  return BoxDomain(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
}

bool BoxDomain::contains(std::span<const double> x) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (x[j] < lower[j] || x[j] > upper[j]) return false;
  }
  return true;
}

double BoxDomain::log_volume() const {
  double lv = 0.0;
  for (std::size_t j = 0; j < lower.size(); ++j) lv += std::log(upper[j] - lower[j]);
  return lv;
}

Objective::Objective(std::string name, std::size_t dim, BoxDomain bounds,
                     EvalFn eval)
    : name_(std::move(name)), dim_(dim), bounds_(std::move(bounds)),
      eval_(std::move(eval)) {
  require(dim_ >= 1, "Objective: dimension must be at least 1");
  require(bounds_.dim() == dim_, "Objective: bounds dimension mismatch");
  require(static_cast<bool>(eval_), "Objective: eval function required");
}

double Objective::operator()(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("Objective '" + name_ + "': point has length " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(dim_));
  }
  double value = eval_(x);
  if (known_min_value_ && value < *known_min_value_ - min_value_slack_) {
    throw evaluation_error(
        "Objective '" + name_ + "': value " + std::to_string(value) +
            " below the declared minimum " + std::to_string(*known_min_value_),
        Point(x.begin(), x.end()));
  }
  return value;
}

Objective& Objective::with_known_minimum(double f_star, Point x_star,
                                         double slack) {
  require(x_star.size() == dim_, "Objective: minimizer dimension mismatch");
  known_min_value_ = f_star;
  known_minimizer_ = std::move(x_star);
  min_value_slack_ = slack;
  return *this;
}

double sinpi(double x) {
  // remainder() is exact, so r in [-1, 1] carries no reduction error.
  double r = std::remainder(x, 2.0);
  double a = std::fabs(r);
  double s = (a <= 0.5) ? std::sin(std::numbers::pi * a)
                        : std::sin(std::numbers::pi * (1.0 - a));
  return r < 0 ? -s : s;
}

Objective ackley(std::size_t dim) {
  require(dim >= 1, "ackley: dimension must be at least 1");
  const double a = 20.0, b = 0.2, c = 2.0 * std::numbers::pi;
  // exp(1) computed the same way as the cosine term below, so the two cancel
  // exactly at the origin and the function value there is 0.0.
  const double e1 = std::exp(1.0);
  auto eval = [=](std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double sum_sq = 0.0, sum_cos = 0.0;
    for (double xi : x) {
      sum_sq += xi * xi;
      sum_cos += std::cos(c * xi);
    }
    return a * (1.0 - std::exp(-b * std::sqrt(sum_sq / d))) +
           (e1 - std::exp(sum_cos / d));
  };
  Objective obj("ackley", dim, BoxDomain::cube(dim, -20.0, 20.0), eval);
  obj.with_known_minimum(0.0, Point(dim, 0.0));
  return obj;
}

Objective levy(std::size_t dim) {
  require(dim >= 1, "levy: dimension must be at least 1");
  auto w_of = [](double x) { return 1.0 + (x - 1.0) / 4.0; };
  auto eval = [=](std::span<const double> x) {
    const std::size_t d = x.size();
    double w1 = w_of(x[0]);
    double s1 = sinpi(w1);
    double value = s1 * s1;
    for (std::size_t i = 0; i + 1 < d; ++i) {
      double wi = w_of(x[i]);
      double si = std::sin(std::numbers::pi * wi + 1.0);
      value += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * si * si);
    }
    double wd = w_of(x[d - 1]);
    double sd = sinpi(2.0 * wd);
    value += (wd - 1.0) * (wd - 1.0) * (1.0 + sd * sd);
    return value;
  };
  Objective obj("levy", dim, BoxDomain::cube(dim, -7.5, 7.5), eval);
  obj.with_known_minimum(0.0, Point(dim, 1.0));
  return obj;
}

Objective demo1d() {
  auto eval = [](std::span<const double> x) {
    return std::cos(x[0] * x[0]) + x[0] / 5.0 + 1.0;
  };
  Objective obj("demo1d", 1, BoxDomain::cube(1, 0.0, 5.0), eval);
  // The quoted optimum has three decimals; the true minimum is ~0.35288, so
  // the slack must cover half an ulp of the quoted figure.
  obj.with_known_minimum(0.353, Point{1.756}, 5e-4);
  return obj;
}

Objective negate(const Objective& obj) {
  auto inner = obj;
  auto eval = [inner](std::span<const double> x) { return -inner(x); };
  return Objective("neg_" + obj.name(), obj.dim(), obj.bounds(), eval);
}

Objective log_transform(const Objective& obj) {
  auto inner = obj;
  auto eval = [inner](std::span<const double> x) {
    double v = inner(x);
    if (!(v > 0.0)) {
      throw evaluation_error("log_transform of '" + inner.name() +
                                 "': non-positive value " + std::to_string(v),
                             Point(x.begin(), x.end()));
    }
    return std::log(v);
  };
  Objective out("log_" + obj.name(), obj.dim(), obj.bounds(), eval);
  if (obj.known_min_value() && obj.known_minimizer() &&
      *obj.known_min_value() > 0.0) {
    double f_star = *obj.known_min_value();
    // First-order transport of the slack through log.
    out.with_known_minimum(std::log(f_star), *obj.known_minimizer(),
                           obj.min_value_slack() / f_star);
  }
  return out;
}

const std::vector<std::string>& objective_names() {
  static const std::vector<std::string> names = {"ackley", "levy", "demo1d"};
  return names;
}

Objective make_objective(const std::string& name, std::size_t dim) {
  if (name == "ackley") return ackley(dim == 0 ? 2 : dim);
  if (name == "levy") return levy(dim == 0 ? 2 : dim);
  if (name == "demo1d") {
    if (dim > 1) {
      throw std::invalid_argument("demo1d is one-dimensional (got dim=" +
                                  std::to_string(dim) + ")");
    }
    return demo1d();
  }
  throw std::invalid_argument("unknown objective '" + name + "'");
}

}  // namespace progo
