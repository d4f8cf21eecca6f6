#pragma once

#include <optional>
#include <string>
#include <vector>

#include "calderon/seq.hpp"
#include "calderon/spaces.hpp"
#include "calderon/step_function.hpp"

namespace calderon {

// Certificate for the pointwise domination mu(x) <= S mu(y).  The probe
// grid holds the right endpoints of mu(x)'s pieces: S mu(y) is decreasing
// and mu(x) is constant per piece, so the per-piece minimum of the slack
// sits at the right endpoint and the check is exact.
struct MajorizationCertificate {
  DecreasingStep mu_x;
  StepFunction y;
  std::vector<double> probes;
  double slack = 0.0;  // min over probes of S mu(y)(t) - mu(x)(t)
  double scale = 1.0;  // max(1, top of mu(x)); feasibility threshold base
  bool feasible = true;

  static constexpr double kRelTol = 1e-12;
};

MajorizationCertificate majorization_feasible(const StepFunction& x,
                                              const StepFunction& y);

// The linear constraint system "S w >= mu(x) on the grid" for decreasing
// nonnegative w supported on the grid pieces, exposed so solvers other than
// the L1 simplex can be attached.
struct MajorizationConstraints {
  std::vector<double> grid;                    // right endpoints, increasing
  std::vector<std::vector<double>> s_kernel;   // row j: S contribution of w_i at grid[j]
  std::vector<double> mu_values;               // mu(x) at grid right endpoints
  std::vector<double> piece_lengths;           // objective weights for L1
};

struct FnormGrid {
  int refine_levels = 0;               // nested geometric-midpoint refinement
  std::vector<double> extra_points;    // additional breakpoints to include
};

MajorizationConstraints build_majorization_constraints(const StepFunction& x,
                                                       const FnormGrid& grid);

struct RangeNormBound {
  double value = 0.0;
  StepFunction witness;
  MajorizationCertificate certificate;
};

// Certified upper bound for the optimal-range norm
// inf{ ||y||_E : mu(x) <= S mu(y) } with E = L1, by a deterministic simplex
// over decreasing step witnesses on the grid.  The bound is monotone under
// grid refinement and homogeneous in x.
RangeNormBound range_norm_upper(const StepFunction& x, const SpaceSpec& space_e,
                                const FnormGrid& grid = {});

// Constructs an L1 witness for x in the weak-L1 core (t mu(t) -> 0 at 0+):
// the running sup f(t) = sup_{s<t} s mu(s) is interpolated linearly on
// dyadic intervals into h, and y = h' on (0,1).  The certificate records the
// direct branch on (0,1] and the 1/h(1)-weighted branch on [1,inf).
struct KolmogorovResult {
  StepFunction y;
  double scale = 1.0;       // weak-L1 norm of x divided out before the build
  double h_at_1 = 0.0;      // mass of y below 1 (normalized units)
  int depth = 0;            // dyadic depth actually used
  MajorizationCertificate direct_branch;   // probes in (0, 1]
  double weighted_branch_slack = 0.0;      // min over probes > 1 of S mu(y)/h(1) - mu(x)
  bool weighted_branch_vacuous = true;     // no probes beyond 1
};

KolmogorovResult kolmogorov_witness(const StepFunction& x, int depth = 20);

// Dyadic decay test behind the weak-L1 core membership: with
// W = ||x||_{weak-L1}, x is a member iff t mu(t)/W drops below 1 - 1e-8
// somewhere on the dyadic grid {2^-1, ..., 2^-depth}.
bool weak_l1_core_member(const StepFunction& x, int depth = 20);

enum class RangeDomain {
  function_l1,      // E = L1(0,inf): optimal range is the weak-L1 core
  sequence_l1,      // E = l1: optimal range is weak-l1
  sequence_weak_l1  // E = l_{1,inf}: range characterized by log(n+2)/(n+1)
};

struct MembershipResult {
  bool member = false;
  double constant = 0.0;  // witness scale / minimal constant
  std::optional<Seq> witness_seq;
  std::optional<StepFunction> witness_y;
  std::string detail;
};

MembershipResult range_membership(RangeDomain kind, const StepFunction& x);
MembershipResult range_membership(RangeDomain kind, const Seq& a);

}  // namespace calderon
