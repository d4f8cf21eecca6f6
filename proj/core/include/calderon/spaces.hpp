#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "calderon/seq.hpp"
#include "calderon/step_function.hpp"

namespace calderon {

// Increasing concave weight phi with phi(0+) = 0, defining a Lorentz norm.
class PhiSpec {
 public:
  enum class Kind {
    log1p,            // phi(t) = log(1 + t)
    t_log_e_over_t,   // phi(t) = t log(e/t) on (0,1], 1 for t >= 1
    zygmund,          // psi(t) = t log(e^2/t) on (0,1], 2 log(e t) on [1,inf)
    piecewise_linear  // phi(0) = 0; given breakpoints and decreasing slopes
  };

  static PhiSpec log1p();
  static PhiSpec t_log_e_over_t();
  static PhiSpec zygmund();
  static PhiSpec piecewise_linear(std::vector<double> breakpoints,
                                  std::vector<double> slopes);

  Kind kind() const { return kind_; }
  double operator()(double t) const;
  std::string name() const;

 private:
  PhiSpec(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<double> pl_breaks_;
  std::vector<double> pl_slopes_;
};

// Descriptor of a symmetric (quasi-)norm; `discrete` selects the sequence
// realization.
struct SpaceSpec {
  enum class Kind { lp, weak_l1, m1inf, lorentz, l1_cap_linf, l1_plus_linf };

  Kind kind = Kind::lp;
  double p = 1.0;  // for Kind::lp; infinity allowed
  std::optional<PhiSpec> phi;
  bool discrete = false;

  static SpaceSpec Lp(double p, bool discrete = false);
  static SpaceSpec WeakL1(bool discrete = false);
  static SpaceSpec M1Inf(bool discrete = false);
  static SpaceSpec Lorentz(PhiSpec phi, bool discrete = false);
  static SpaceSpec L1CapLInf(bool discrete = false);
  static SpaceSpec L1PlusLInf(bool discrete = false);

  // Compact string grammar: "lp:1.5", "lp:inf", "weak-l1", "m1inf",
  // "lorentz:log1p", "lorentz:tloge", "lorentz:psi", "l1+linf", "l1^linf".
  static SpaceSpec parse(std::string_view text, bool discrete = false);
  std::string to_string() const;
};

// Exact (quasi-)norm of a step function.  Rearrangement-based norms go
// through the decreasing rearrangement; L_p and L1^LInf are computed
// directly on |x| (same value, and it keeps the mu-invariance property test
// meaningful).
double norm(const StepFunction& x, const SpaceSpec& spec);

// Exact (quasi-)norm of a finite sequence.
double norm(const Seq& a, const SpaceSpec& spec);

// max over the grid of (p - 1) * ||a||_{l_p}; a lower bound for the true
// sup over (1, 2] that converges as the grid refines.
double sup_p_blowup(const Seq& a, std::span<const double> p_grid);

// int_0^1 mu(t, x) * max(log mu(t, x), 0) dt, exact per piece.
double llogl_functional(const StepFunction& x);

}  // namespace calderon
