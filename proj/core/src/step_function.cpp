#include "calderon/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace calderon {

namespace {

void canonicalize(std::vector<double>& bp, std::vector<double>& v) {
  // Merge adjacent equal-valued pieces.
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (out > 0 && v[out - 1] == v[i]) {
      bp[out - 1] = bp[i];
    } else {
      bp[out] = bp[i];
      v[out] = v[i];
      ++out;
    }
  }
  bp.resize(out);
  v.resize(out);
  // Drop trailing zeros; the function is 0 beyond the last breakpoint anyway.
  while (!v.empty() && v.back() == 0.0) {
    v.pop_back();
    bp.pop_back();
  }
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size()) {
    throw std::invalid_argument("StepFunction: breakpoints/values size mismatch");
  }
  double prev = 0.0;
  for (double t : breakpoints_) {
    if (!std::isfinite(t) || t <= prev) {
      throw std::invalid_argument(
          "StepFunction: breakpoints must be finite, positive and strictly "
          "increasing");
    }
    prev = t;
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("StepFunction: values must be finite");
    }
  }
  canonicalize(breakpoints_, values_);
}

double StepFunction::support_end() const {
  return breakpoints_.empty() ? 0.0 : breakpoints_.back();
}

double StepFunction::operator()(double t) const {
  if (t <= 0.0 || breakpoints_.empty() || t > breakpoints_.back()) return 0.0;
  const auto it =
      std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double StepFunction::value_right(double t) const {
  if (t < 0.0 || breakpoints_.empty() || t >= breakpoints_.back()) return 0.0;
  const auto it =
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double StepFunction::integral() const {
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    acc += values_[i] * (breakpoints_[i] - prev);
    prev = breakpoints_[i];
  }
  return acc;
}

double StepFunction::integral_to(double t) const {
  if (t <= 0.0) return 0.0;
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double hi = std::min(breakpoints_[i], t);
    if (hi <= prev) break;
    acc += values_[i] * (hi - prev);
    prev = breakpoints_[i];
    if (breakpoints_[i] >= t) break;
  }
  return acc;
}

double StepFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

StepFunction operator+(const StepFunction& x, const StepFunction& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  std::vector<double> bp;
  bp.reserve(x.piece_count() + y.piece_count());
  std::merge(x.breakpoints().begin(), x.breakpoints().end(),
             y.breakpoints().begin(), y.breakpoints().end(),
             std::back_inserter(bp));
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  std::vector<double> v(bp.size());
  for (std::size_t i = 0; i < bp.size(); ++i) v[i] = x(bp[i]) + y(bp[i]);
  return StepFunction(std::move(bp), std::move(v));
}

StepFunction operator*(double alpha, const StepFunction& x) {
  std::vector<double> v = x.values();
  for (double& e : v) e *= alpha;
  return StepFunction(x.breakpoints(), std::move(v));
}

StepFunction abs_value(const StepFunction& x) {
  std::vector<double> v = x.values();
  for (double& e : v) e = std::abs(e);
  return StepFunction(x.breakpoints(), std::move(v));
}

DecreasingStep::DecreasingStep(StepFunction f) : step_(std::move(f)) {
  double prev = std::numeric_limits<double>::infinity();
  for (double v : step_.values()) {
    if (v < 0.0 || v > prev) {
      throw std::invalid_argument(
          "DecreasingStep: values must be nonnegative and nonincreasing");
    }
    prev = v;
  }
}

double DecreasingStep::top() const {
  return step_.values().empty() ? 0.0 : step_.values().front();
}

}  // namespace calderon
