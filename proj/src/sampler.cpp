#include "progo/sampler.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "progo/errors.hpp"

namespace progo {

LssState init_state(const LogTarget& log_target, const Point& x0,
                    const LssConfig& cfg, Rng& rng) {
  cfg.validate();
  const double lt0 = log_target(x0);
  if (!std::isfinite(lt0)) {
    throw std::invalid_argument(
        "init_state: log_target(x0) = " + std::to_string(lt0) +
        "; the chain must start at an in-support point");
  }
  const std::size_t d = x0.size();
  LssState st;
  st.x = x0;
  st.log_level_base = lt0;
  st.log_level_offset = std::log(rng.uniform_open());
  st.widths.resize(d);
  st.anchors.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    st.widths[j] = rng.gamma_shape2(cfg.beta);
    st.anchors[j] = rng.uniform(x0[j] - st.widths[j] / 2.0,
                                x0[j] + st.widths[j] / 2.0);
  }
  return st;
}

void shrink(std::vector<double>& a, std::vector<double>& b,
            std::span<const double> proposal, std::span<const double> current) {
  const std::size_t d = a.size();
  if (b.size() != d || proposal.size() != d || current.size() != d) {
    throw std::logic_error("shrink: mismatched dimensions");
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (!(a[j] <= current[j] && current[j] <= b[j]) ||
        !(a[j] <= proposal[j] && proposal[j] <= b[j])) {
      throw std::logic_error("shrink: point left the bracket (sampler bug)");
    }
    if (proposal[j] < current[j]) {
      a[j] = proposal[j];
    } else {
      b[j] = proposal[j];
    }
  }
}

LssStepResult lss_step(const LssState& state, const LogTarget& log_target,
                       const LssConfig& cfg, Rng& rng) {
  const std::size_t d = state.x.size();
  std::vector<double> a(d), b(d);
  for (std::size_t j = 0; j < d; ++j) {
    a[j] = state.anchors[j] - state.widths[j] / 2.0;
    b[j] = state.anchors[j] + state.widths[j] / 2.0;
    // Guard against rounding pushing an edge past the current point.
    if (a[j] > state.x[j]) a[j] = state.x[j];
    if (b[j] < state.x[j]) b[j] = state.x[j];
  }

  LssStepResult out;
  Point proposal(d);
  bool accepted = false;
  double lt_prop = 0.0;
  for (std::size_t attempt = 0; attempt < cfg.max_shrink_steps; ++attempt) {
    for (std::size_t j = 0; j < d; ++j) {
      proposal[j] = rng.uniform(a[j], b[j]);
      // lo + (hi-lo)*u can land one ulp past hi when fl(hi-lo) rounded up.
      if (proposal[j] > b[j]) proposal[j] = b[j];
    }
    lt_prop = log_target(proposal);
    ++out.target_evals;
    if (std::isnan(lt_prop)) {
      throw evaluation_error("lss_step: log_target returned NaN", proposal);
    }
    if (lt_prop - state.log_level_base > state.log_level_offset) {
      accepted = true;
      break;
    }
    shrink(a, b, proposal, state.x);
    // Once every coordinate interval is down to a couple of ulps around the
    // current point, the uniform draw on the remaining bracket is the
    // current point itself (which always satisfies the slice). Landing on
    // it exactly in all dimensions by chance would still take ~2^d draws,
    // so take the limit deliberately. Reached only at extreme sharpening,
    // where the target distinguishes adjacent representable points.
    bool pinched = true;
    for (std::size_t j = 0; j < d; ++j) {
      const double scale = std::max(std::fabs(a[j]), std::fabs(b[j]));
      if (b[j] - a[j] > 2.0 * std::numeric_limits<double>::epsilon() * scale) {
        pinched = false;
        break;
      }
    }
    if (pinched) {
      proposal = state.x;
      lt_prop = state.log_level_base;
      accepted = true;
      break;
    }
  }
  if (!accepted) {
    throw non_termination_error(
        "lss_step: no acceptance within " +
            std::to_string(cfg.max_shrink_steps) + " shrink steps",
        state);
  }

  LssState next;
  next.x = std::move(proposal);
  next.log_level_base = lt_prop;
  next.log_level_offset = std::log(rng.uniform_open());
  next.widths.resize(d);
  next.anchors.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    // Full conditional of the Gamma(2, beta) width prior given (l, x):
    // a shifted exponential.
    next.widths[j] = 2.0 * std::fabs(state.anchors[j] - next.x[j]) +
                     rng.exponential(cfg.beta);
  }
  for (std::size_t j = 0; j < d; ++j) {
    next.anchors[j] = rng.uniform(next.x[j] - next.widths[j] / 2.0,
                                  next.x[j] + next.widths[j] / 2.0);
  }
  out.state = std::move(next);
  return out;
}

LssSampleResult lss_sample(const LogTarget& log_target, const Point& x0,
                           const LssConfig& cfg, Rng& rng) {
  LssState st = init_state(log_target, x0, cfg, rng);
  LssSampleResult out;
  out.target_evals = 1;  // the init_state call
  out.points.reserve(cfg.sample_count);
  const std::size_t total = cfg.burn_in + cfg.sample_count;
  for (std::size_t i = 0; i < total; ++i) {
    LssStepResult step = lss_step(st, log_target, cfg, rng);
    st = std::move(step.state);
    out.target_evals += step.target_evals;
    if (i >= cfg.burn_in) out.points.push_back(st.x);
  }
  return out;
}

}  // namespace progo
