#pragma once

#include <span>

#include "calderon/seq.hpp"
#include "calderon/step_function.hpp"

namespace calderon {

// Measure-preserving decreasing sort of |x|: same multiset of
// (|value|, piece-length) pairs, sorted by value descending and cumulated
// into breakpoints.  Ties keep the original piece order, which does not
// affect the result.
DecreasingStep decreasing_rearrangement(const StepFunction& x);

// |a| sorted descending, offset 0.
Seq decreasing_rearrangement(const Seq& a);

// sigma_s x(t) := x(t/s): breakpoints scaled by s, values unchanged.
StepFunction dilate(const StepFunction& x, double s);
DecreasingStep dilate(const DecreasingStep& x, double s);

// True iff x submajorizes y in the Hardy-Littlewood-Polya sense:
// int_0^t y <= int_0^t x for all t >= 0.  Both cumulative integrals are
// piecewise linear, so comparison at the union of breakpoints is exact;
// `rel_tol` adds slack relative to the larger total integral.
bool submajorizes(const DecreasingStep& x, const DecreasingStep& y,
                  double rel_tol = 0.0);

// mu(t+s, x+y) <= mu(t, x) + mu(s, y), evaluated with the storage convention
// at t+s, t, s.
bool triangle_inequality_holds(const StepFunction& x, const StepFunction& y,
                               double t, double s);

// mu(sum_n x_n) <= sum_n sigma_{2^n} mu(x_n) (n starting at 1), checked
// pointwise at all union breakpoints.
bool dilation_sum_bound_holds(std::span<const StepFunction> xs);

}  // namespace calderon
