#pragma once

#include <vector>

namespace calderon {

// Dense two-phase simplex with Bland's rule for the covering form
//   minimize c . x   subject to   A x >= b,  x >= 0.
// Deterministic; intended for small instances (<= 512 variables).
struct LinearProgram {
  std::vector<double> objective;               // c, size n
  std::vector<std::vector<double>> constraints;  // A, m rows of size n
  std::vector<double> rhs;                     // b, size m
};

struct LpSolution {
  std::vector<double> x;
  double value = 0.0;
};

// Throws std::runtime_error on infeasible or unbounded instances.
LpSolution solve_min(const LinearProgram& lp);

}  // namespace calderon
