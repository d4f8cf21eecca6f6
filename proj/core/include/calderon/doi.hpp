#pragma once

#include <functional>
#include <string>
#include <vector>

#include "calderon/matrix_op.hpp"

namespace calderon {

// Real-valued Lipschitz function with a caller-certified bound.
class LipschitzFn {
 public:
  LipschitzFn(std::string name, std::function<double(double)> f, double lip);

  double operator()(double x) const { return f_(x); }
  double lip() const { return lip_; }
  const std::string& name() const { return name_; }

  static LipschitzFn absolute_value();
  static LipschitzFn sine();
  // x^2 certified on [-radius, radius]; Lip = 2 * radius.
  static LipschitzFn square(double radius);
  // Linear interpolation through (xs, ys), constant outside; Lip = max slope.
  static LipschitzFn piecewise_linear(std::vector<double> xs,
                                      std::vector<double> ys);

 private:
  std::string name_;
  std::function<double(double)> f_;
  double lip_;
};

// A = U diag(eigenvalues) U^H for hermitian A; eigenvalues ascending.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  MatrixOp u;
};
HermitianEigen hermitian_eigen(const MatrixOp& a);

MatrixOp matrix_function(const MatrixOp& a, const LipschitzFn& f);

// Double operator integral with the divided-difference symbol
// f^[1](l, m) = (f(l) - f(m)) / (l - m) off coincidence, 0 on it: returns
// U (M o (U^H V U)) U^H.  Eigenvalues within
// 1e-12 * max(1, |l|, |m|) of each other count as coincident and get
// multiplier 0.
MatrixOp double_operator_integral(const MatrixOp& a, const LipschitzFn& f,
                                  const MatrixOp& v);

struct CommutatorCheck {
  bool degenerate = false;  // [A, B] = 0: no ratio to report
  double ratio = 0.0;       // ||[f(A),B]||_F-spec / (Lip(f) ||[A,B]||_E-spec)
  std::size_t n = 0;
  std::vector<double> spectrum_a;
  std::vector<double> spectrum_b;
};

// Computes the commutator ratio in the requested norms.  For
// spec_e = spec_f = L2 the Schur multiplier is a Frobenius contraction, so
// ratio <= 1 + 1e-10 is enforced.
CommutatorCheck lipschitz_commutator_check(const MatrixOp& a,
                                           const MatrixOp& b,
                                           const LipschitzFn& f,
                                           const SpaceSpec& spec_e,
                                           const SpaceSpec& spec_f);

}  // namespace calderon
