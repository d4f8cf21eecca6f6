#pragma once

#include <cstdint>
#include <vector>

#include "calderon/calderon_profile.hpp"
#include "calderon/seq.hpp"
#include "calderon/step_function.hpp"

namespace calderon {

// (Cx)(t) = (1/t) int_0^t x(s) ds, exact profile; (int x)/t beyond the
// support.
CalderonProfile cesaro(const StepFunction& x);

// (C'x)(t) = int_t^inf x(s) ds/s; 0 beyond the support.
CalderonProfile cesaro_dual(const StepFunction& x);

// (Sx)(t) = (Cx)(t) + (C'x)(t).  For decreasing nonnegative input the
// profile is nonincreasing and S mu(x) is its own rearrangement.
CalderonProfile calderon_op(const StepFunction& x);

// (S^d a)(n) = 1/(n+1) sum_{k<=n} a(k) + sum_{k>n} a(k)/k for n in
// [0, count); exact because the support is finite.  Requires a supported on
// Z+ (offset >= 0).
Seq calderon_discrete(const Seq& a, std::size_t count);

// Signed step function on the real line: value v_i on (b_{i-1}, b_i] for a
// strictly increasing breakpoint list b_0 < ... < b_n, zero outside
// (b_0, b_n].  Input type of the Hilbert transform.
class LineStep {
 public:
  LineStep() = default;
  LineStep(std::vector<double> breakpoints, std::vector<double> values);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  double operator()(double t) const;

 private:
  std::vector<double> breakpoints_;  // size m+1 for m pieces (empty if zero)
  std::vector<double> values_;
};

// Half-line embedding: x on (0, t_n] becomes a LineStep with leading
// breakpoint 0.
LineStep on_half_line(const StepFunction& x);

// (Hx)(t) = p.v. (1/pi) int x(s)/(t-s) ds
//         = (1/pi) sum_i v_i log(|t - l_i| / |t - r_i|).
// Exact; throws if t coincides with a breakpoint.
double hilbert_transform(const LineStep& x, double t);

// (H_d a)(n) = (2/(pi i)) sum_{k - n odd} a(k)/(k - n) over the window
// [n_lo, n_hi]; exact finite sums with the parity constraint enforced.
CplxSeq hilbert_discrete(const Seq& a, std::int64_t n_lo, std::int64_t n_hi);

// Places mu(a) on the even nonpositive integers: c(-2j) = mu(j, a).  The
// sequence is a rearrangement of a, so mu(c) = mu(a).
Seq rearrangement_witness(const Seq& a);

// Same values shifted one slot to the odd nonpositive integers:
// c(-2j-1) = mu(j, a).  With this placement the discrete Hilbert transform
// is supported on the even integers, where it dominates
// (1/2pi) S^d mu(a) pointwise.
Seq rearrangement_witness_odd(const Seq& a);

// Fourier multiplier symbol of the sign-truncated convolution kernel:
// b(n) = (2/(pi i)) sum_{k - n odd} a(k)/(n - k).  Computed by its own sum
// and checked against hilbert_discrete: |b(n)| = |(H_d a)(n)| exactly (the
// two displays differ by sign only).
CplxSeq truncation_symbol(const Seq& a, std::int64_t n_lo, std::int64_t n_hi);

}  // namespace calderon
