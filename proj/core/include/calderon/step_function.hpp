#pragma once

#include <cstddef>
#include <vector>

namespace calderon {

// Finitely supported piecewise-constant function on (0, inf).
//
// The representation is a strictly increasing list of positive breakpoints
// t_1 < ... < t_n and values v_1 ... v_n, with x(t) = v_i on (t_{i-1}, t_i]
// (t_0 = 0) and x(t) = 0 for t > t_n.  Construction canonicalizes: adjacent
// pieces with equal values are merged and trailing zero-valued pieces are
// dropped, so structural equality is equality of the represented functions.
class StepFunction {
 public:
  StepFunction() = default;  // the zero function
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t piece_count() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  // End of the support, 0 for the zero function.
  double support_end() const;

  // Value under the storage convention: v_i on (t_{i-1}, t_i], 0 outside.
  double operator()(double t) const;

  // Right-continuous branch: lim_{s -> t+} x(s), defined for t >= 0.
  double value_right(double t) const;

  double integral() const;
  double integral_to(double t) const;  // of x over (0, t]

  // Largest |value|; 0 for the zero function.
  double max_abs() const;

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.breakpoints_ == b.breakpoints_ && a.values_ == b.values_;
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

StepFunction operator+(const StepFunction& x, const StepFunction& y);
StepFunction operator*(double alpha, const StepFunction& x);
StepFunction abs_value(const StepFunction& x);

// Nonnegative nonincreasing step function; the image of the decreasing
// rearrangement.  Validated on construction.
class DecreasingStep {
 public:
  DecreasingStep() = default;
  explicit DecreasingStep(StepFunction f);

  const StepFunction& step() const { return step_; }
  double operator()(double t) const { return step_(t); }
  bool is_zero() const { return step_.is_zero(); }
  double top() const;  // value of the first piece, 0 if zero

 private:
  StepFunction step_;
};

}  // namespace calderon
