#pragma once

#include <vector>

namespace calderon {

// Piecewise function t -> a + b/t + c*log(t) on (0, inf); the exact image of
// step functions under the Cesaro operator, its dual, and their sum.  Pieces
// cover (0, inf): piece i lives on (end_{i-1}, end_i] with end_0 = 0 and the
// last end infinite.
class CalderonProfile {
 public:
  struct Piece {
    double end;  // right endpoint of the piece; +inf for the last one
    double a = 0.0;
    double b = 0.0;  // coefficient of 1/t
    double c = 0.0;  // coefficient of log(t)
  };

  CalderonProfile();  // identically zero
  explicit CalderonProfile(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }

  // Evaluation at t > 0; at a breakpoint the right-continuous branch is
  // used (the profile is continuous, so the branches agree analytically).
  double operator()(double t) const;

  // Exact integral over (lo, hi), 0 <= lo < hi < inf.
  double integral(double lo, double hi) const;

  CalderonProfile operator+(const CalderonProfile& other) const;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace calderon
