#include "calderon/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "calderon/rearrangement.hpp"

namespace calderon {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

CalderonProfile cesaro(const StepFunction& x) {
  std::vector<CalderonProfile::Piece> pieces;
  pieces.reserve(x.piece_count() + 1);
  double prev = 0.0;
  double cum = 0.0;
  for (std::size_t i = 0; i < x.piece_count(); ++i) {
    const double v = x.values()[i];
    const double end = x.breakpoints()[i];
    // int_0^t x = cum + v (t - prev)  =>  (Cx)(t) = v + (cum - v*prev)/t.
    pieces.push_back({end, v, cum - v * prev, 0.0});
    cum += v * (end - prev);
    prev = end;
  }
  pieces.push_back({kInf, 0.0, cum, 0.0});
  return CalderonProfile(std::move(pieces));
}

CalderonProfile cesaro_dual(const StepFunction& x) {
  const std::size_t n = x.piece_count();
  std::vector<CalderonProfile::Piece> pieces;
  pieces.reserve(n + 1);
  // Suffix sums R_i = sum_{j>i} v_j log(t_j/t_{j-1}).
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t j = n; j-- > 0;) {
    const double lo = j == 0 ? 0.0 : x.breakpoints()[j - 1];
    // The j = 0 term never enters a suffix (only pieces strictly after i),
    // so log(0) cannot occur.
    const double seg =
        j == 0 ? 0.0 : x.values()[j] * std::log(x.breakpoints()[j] / lo);
    suffix[j] = suffix[j + 1] + seg;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x.values()[i];
    const double end = x.breakpoints()[i];
    // For t in piece i: int_t^{t_i} v/s ds + R_i = v log(t_i) - v log(t) + R_i.
    pieces.push_back({end, v * std::log(end) + suffix[i + 1], 0.0, -v});
  }
  pieces.push_back({kInf, 0.0, 0.0, 0.0});
  return CalderonProfile(std::move(pieces));
}

CalderonProfile calderon_op(const StepFunction& x) {
  return cesaro(x) + cesaro_dual(x);
}

Seq calderon_discrete(const Seq& a, std::size_t count) {
  if (!a.is_zero() && a.first_index() < 0) {
    throw std::domain_error("calderon_discrete: input must be supported on Z+");
  }
  if (count == 0) return Seq();
  const std::int64_t kmax = a.is_zero() ? -1 : a.last_index();
  // Prefix sums and the tail sums sum_{k>n} a(k)/k.
  std::vector<double> out(count, 0.0);
  for (std::size_t n = 0; n < count; ++n) {
    double head = 0.0;
    for (std::int64_t k = 0; k <= std::min<std::int64_t>(n, kmax); ++k) {
      head += a.at(k);
    }
    double tail = 0.0;
    for (std::int64_t k = static_cast<std::int64_t>(n) + 1; k <= kmax; ++k) {
      tail += a.at(k) / static_cast<double>(k);
    }
    out[n] = head / static_cast<double>(n + 1) + tail;
  }
  return Seq(0, std::move(out));
}

LineStep::LineStep(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size() + 1) {
    throw std::invalid_argument(
        "LineStep: need one more breakpoint than values");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1]) ||
        !std::isfinite(breakpoints_[i])) {
      throw std::invalid_argument("LineStep: breakpoints must strictly increase");
    }
  }
  if (!breakpoints_.empty() && !std::isfinite(breakpoints_.front())) {
    throw std::invalid_argument("LineStep: breakpoints must be finite");
  }
}

double LineStep::operator()(double t) const {
  if (values_.empty() || t <= breakpoints_.front() || t > breakpoints_.back()) {
    return 0.0;
  }
  const auto it =
      std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

LineStep on_half_line(const StepFunction& x) {
  if (x.is_zero()) return LineStep();
  std::vector<double> bp;
  bp.reserve(x.piece_count() + 1);
  bp.push_back(0.0);
  bp.insert(bp.end(), x.breakpoints().begin(), x.breakpoints().end());
  return LineStep(std::move(bp), x.values());
}

double hilbert_transform(const LineStep& x, double t) {
  for (double b : x.breakpoints()) {
    if (t == b) {
      throw std::domain_error(
          "hilbert_transform: t coincides with a breakpoint");
    }
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    const double l = x.breakpoints()[i];
    const double r = x.breakpoints()[i + 1];
    acc += x.values()[i] * std::log(std::abs(t - l) / std::abs(t - r));
  }
  return acc / M_PI;
}

namespace {

// Shared kernel for H_d and the truncation symbol; `sign` selects the
// denominator orientation (k - n vs n - k).
CplxSeq parity_sum(const Seq& a, std::int64_t n_lo, std::int64_t n_hi,
                   double sign) {
  if (n_hi < n_lo) {
    throw std::invalid_argument("parity window must satisfy n_lo <= n_hi");
  }
  const std::complex<double> factor =
      2.0 / (M_PI * std::complex<double>(0.0, 1.0));
  std::vector<std::complex<double>> out(
      static_cast<std::size_t>(n_hi - n_lo + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    double s = 0.0;
    for (std::int64_t k = a.first_index(); !a.is_zero() && k <= a.last_index();
         ++k) {
      const std::int64_t d = k - n;
      if ((d % 2 + 2) % 2 != 1) continue;  // keep k - n odd
      s += a.at(k) / static_cast<double>(d);
    }
    out[static_cast<std::size_t>(n - n_lo)] = factor * (sign * s);
  }
  return CplxSeq(n_lo, std::move(out));
}

}  // namespace

CplxSeq hilbert_discrete(const Seq& a, std::int64_t n_lo, std::int64_t n_hi) {
  return parity_sum(a, n_lo, n_hi, +1.0);
}

Seq rearrangement_witness(const Seq& a) {
  const Seq mu = decreasing_rearrangement(a);
  if (mu.is_zero()) return Seq();
  const std::int64_t len = static_cast<std::int64_t>(mu.size());
  std::vector<double> entries(static_cast<std::size_t>(2 * (len - 1) + 1), 0.0);
  for (std::int64_t j = 0; j < len; ++j) {
    // c(-2j) = mu(j); window is [-2(len-1), 0].
    entries[static_cast<std::size_t>(2 * (len - 1) - 2 * j)] = mu.at(j);
  }
  return Seq(-2 * (len - 1), std::move(entries));
}

Seq rearrangement_witness_odd(const Seq& a) {
  const Seq mu = decreasing_rearrangement(a);
  if (mu.is_zero()) return Seq();
  const std::int64_t len = static_cast<std::int64_t>(mu.size());
  std::vector<double> entries(static_cast<std::size_t>(2 * (len - 1) + 1), 0.0);
  for (std::int64_t j = 0; j < len; ++j) {
    // c(-2j-1) = mu(j); window is [-2(len-1)-1, -1].
    entries[static_cast<std::size_t>(2 * (len - 1) - 2 * j)] = mu.at(j);
  }
  return Seq(-2 * (len - 1) - 1, std::move(entries));
}

CplxSeq truncation_symbol(const Seq& a, std::int64_t n_lo, std::int64_t n_hi) {
  CplxSeq b = parity_sum(a, n_lo, n_hi, -1.0);
  const CplxSeq h = hilbert_discrete(a, n_lo, n_hi);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::abs(b.entries()[i]) != std::abs(h.entries()[i])) {
      throw std::logic_error(
          "truncation_symbol: modulus mismatch against the transform");
    }
  }
  return b;
}

}  // namespace calderon
