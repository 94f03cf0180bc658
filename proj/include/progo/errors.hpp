#ifndef PROGO_ERRORS_HPP_
#define PROGO_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace progo {

// Objective or density evaluation produced an unusable value. Carries the
// offending point for diagnostics.
class evaluation_error : public std::runtime_error {
 public:
  evaluation_error(std::string what, std::vector<double> point)
      : std::runtime_error(std::move(what)), point_(std::move(point)) {}

  const std::vector<double>& point() const { return point_; }

 private:
  std::vector<double> point_;
};

// The geometric k-schedule left the range of finite doubles.
class schedule_overflow_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace progo

#endif  // PROGO_ERRORS_HPP_
