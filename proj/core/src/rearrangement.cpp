#include "calderon/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace calderon {

DecreasingStep decreasing_rearrangement(const StepFunction& x) {
  struct Piece {
    double value;
    double length;
  };
  std::vector<Piece> pieces;
  pieces.reserve(x.piece_count());
  double prev = 0.0;
  for (std::size_t i = 0; i < x.piece_count(); ++i) {
    pieces.push_back({std::abs(x.values()[i]), x.breakpoints()[i] - prev});
    prev = x.breakpoints()[i];
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Piece& a, const Piece& b) { return a.value > b.value; });
  std::vector<double> bp, v;
  bp.reserve(pieces.size());
  v.reserve(pieces.size());
  double t = 0.0;
  for (const Piece& p : pieces) {
    t += p.length;
    bp.push_back(t);
    v.push_back(p.value);
  }
  return DecreasingStep(StepFunction(std::move(bp), std::move(v)));
}

Seq decreasing_rearrangement(const Seq& a) {
  std::vector<double> m(a.entries());
  for (double& e : m) e = std::abs(e);
  std::sort(m.begin(), m.end(), std::greater<double>());
  return Seq(0, std::move(m));
}

StepFunction dilate(const StepFunction& x, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::domain_error("dilate: scale must be positive and finite");
  }
  std::vector<double> bp = x.breakpoints();
  for (double& t : bp) t *= s;
  return StepFunction(std::move(bp), x.values());
}

DecreasingStep dilate(const DecreasingStep& x, double s) {
  return DecreasingStep(dilate(x.step(), s));
}

bool submajorizes(const DecreasingStep& x, const DecreasingStep& y,
                  double rel_tol) {
  std::vector<double> grid;
  grid.reserve(x.step().piece_count() + y.step().piece_count());
  std::merge(x.step().breakpoints().begin(), x.step().breakpoints().end(),
             y.step().breakpoints().begin(), y.step().breakpoints().end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const double scale =
      std::max({1.0, x.step().integral(), y.step().integral()});
  const double slack = rel_tol * scale;
  for (double t : grid) {
    if (y.step().integral_to(t) > x.step().integral_to(t) + slack) return false;
  }
  return true;
}

bool triangle_inequality_holds(const StepFunction& x, const StepFunction& y,
                               double t, double s) {
  if (!(t > 0.0) || !(s > 0.0)) {
    throw std::domain_error("triangle_inequality_holds: t, s must be positive");
  }
  const DecreasingStep mu_sum = decreasing_rearrangement(x + y);
  const DecreasingStep mu_x = decreasing_rearrangement(x);
  const DecreasingStep mu_y = decreasing_rearrangement(y);
  const double lhs = mu_sum(t + s);
  const double rhs = mu_x(t) + mu_y(s);
  const double slack = 1e-12 * std::max(1.0, rhs);
  return lhs <= rhs + slack;
}

bool dilation_sum_bound_holds(std::span<const StepFunction> xs) {
  StepFunction lhs_sum;
  StepFunction rhs_sum;
  double factor = 2.0;
  for (const StepFunction& x : xs) {
    lhs_sum = lhs_sum + x;
    rhs_sum = rhs_sum + dilate(decreasing_rearrangement(x), factor).step();
    factor *= 2.0;
  }
  const StepFunction lhs = decreasing_rearrangement(lhs_sum).step();
  std::vector<double> grid;
  std::merge(lhs.breakpoints().begin(), lhs.breakpoints().end(),
             rhs_sum.breakpoints().begin(), rhs_sum.breakpoints().end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const double slack = 1e-12 * std::max(1.0, rhs_sum.max_abs());
  for (double t : grid) {
    if (lhs(t) > rhs_sum(t) + slack) return false;
  }
  return true;
}

}  // namespace calderon
