#include "calderon/optimal_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "calderon/operators.hpp"
#include "calderon/rearrangement.hpp"
#include "calderon/simplex.hpp"

namespace calderon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

MajorizationCertificate make_certificate(const StepFunction& x,
                                         const StepFunction& y,
                                         double probe_cap = kInf) {
  MajorizationCertificate cert;
  cert.mu_x = decreasing_rearrangement(x);
  cert.y = y;
  cert.scale = std::max(1.0, cert.mu_x.top());
  for (double t : cert.mu_x.step().breakpoints()) {
    if (t <= probe_cap) cert.probes.push_back(t);
  }
  if (cert.probes.empty()) {
    cert.slack = kInf;
    cert.feasible = true;
    return cert;
  }
  const CalderonProfile s_mu_y =
      calderon_op(decreasing_rearrangement(y).step());
  cert.slack = kInf;
  for (double t : cert.probes) {
    cert.slack = std::min(cert.slack, s_mu_y(t) - cert.mu_x(t));
  }
  cert.feasible = cert.slack >= -MajorizationCertificate::kRelTol * cert.scale;
  return cert;
}

// sup_{0<s<t} s * mu(s) for a decreasing step mu; exact (the sup over each
// piece is a one-sided limit at its right end).
double running_sup(const DecreasingStep& mu, double t) {
  double best = 0.0;
  double prev = 0.0;
  const auto& f = mu.step();
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const double end = f.breakpoints()[i];
    if (t <= prev) break;
    best = std::max(best, std::min(end, t) * f.values()[i]);
    prev = end;
  }
  return best;
}

}  // namespace

MajorizationCertificate majorization_feasible(const StepFunction& x,
                                              const StepFunction& y) {
  return make_certificate(x, y);
}

MajorizationConstraints build_majorization_constraints(const StepFunction& x,
                                                       const FnormGrid& grid) {
  const DecreasingStep mu = decreasing_rearrangement(x);
  if (mu.is_zero()) return MajorizationConstraints{};

  std::vector<double> g = mu.step().breakpoints();
  for (double t : grid.extra_points) {
    if (t > 0.0 && std::isfinite(t)) g.push_back(t);
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  for (int level = 0; level < grid.refine_levels; ++level) {
    std::vector<double> refined;
    refined.reserve(2 * g.size());
    double prev = 0.0;
    for (double t : g) {
      const double mid = prev == 0.0 ? t / 2.0 : std::sqrt(prev * t);
      if (mid > prev && mid < t) refined.push_back(mid);
      refined.push_back(t);
      prev = t;
    }
    g = std::move(refined);
  }
  if (g.size() > 512) {
    throw std::invalid_argument(
        "build_majorization_constraints: grid exceeds 512 variables");
  }

  MajorizationConstraints out;
  out.grid = g;
  const std::size_t m = g.size();
  out.mu_values.resize(m);
  out.piece_lengths.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    out.mu_values[j] = mu(g[j]);
    out.piece_lengths[j] = g[j] - (j == 0 ? 0.0 : g[j - 1]);
  }
  // (S w)(t_j) = sum_i w_i * K_ij with the exact min(1/t_j, 1/s) kernel
  // integrated over piece i.
  out.s_kernel.assign(m, std::vector<double>(m, 0.0));
  for (std::size_t j = 0; j < m; ++j) {
    const double t = g[j];
    for (std::size_t i = 0; i < m; ++i) {
      const double lo = i == 0 ? 0.0 : g[i - 1];
      const double hi = g[i];
      double k = 0.0;
      const double head = std::min(hi, t) - lo;
      if (head > 0.0) k += head / t;
      const double tail_lo = std::max(lo, t);
      if (hi > tail_lo) k += std::log(hi / tail_lo);
      out.s_kernel[j][i] = k;
    }
  }
  return out;
}

RangeNormBound range_norm_upper(const StepFunction& x, const SpaceSpec& space_e,
                                const FnormGrid& grid) {
  if (space_e.kind != SpaceSpec::Kind::lp || space_e.p != 1.0 ||
      space_e.discrete) {
    throw std::invalid_argument(
        "range_norm_upper: only E = L1(0,inf) is supported; attach a convex "
        "solver to build_majorization_constraints for other exponents");
  }
  RangeNormBound out;
  if (x.is_zero()) {
    out.certificate = majorization_feasible(x, out.witness);
    return out;
  }
  const MajorizationConstraints mc = build_majorization_constraints(x, grid);
  const std::size_t m = mc.grid.size();

  LinearProgram lp;
  lp.objective = mc.piece_lengths;
  // Domination rows.
  for (std::size_t j = 0; j < m; ++j) {
    lp.constraints.push_back(mc.s_kernel[j]);
    lp.rhs.push_back(mc.mu_values[j]);
  }
  // Monotonicity rows w_i - w_{i+1} >= 0.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    std::vector<double> row(m, 0.0);
    row[i] = 1.0;
    row[i + 1] = -1.0;
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(0.0);
  }
  const LpSolution sol = solve_min(lp);

  // Clean the witness: clamp to a decreasing nonnegative profile, then lift
  // multiplicatively so the domination holds exactly under re-evaluation.
  std::vector<double> w = sol.x;
  double run = 0.0;
  for (std::size_t i = m; i-- > 0;) {
    run = std::max(run, std::max(0.0, w[i]));
    w[i] = run;
  }
  double lift = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    double sw = 0.0;
    for (std::size_t i = 0; i < m; ++i) sw += mc.s_kernel[j][i] * w[i];
    if (mc.mu_values[j] > 0.0 && sw > 0.0) {
      lift = std::max(lift, mc.mu_values[j] / sw);
    }
  }
  double value = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    w[i] *= lift;
    value += w[i] * mc.piece_lengths[i];
  }
  out.witness = StepFunction(mc.grid, std::move(w));
  out.value = value;
  out.certificate = majorization_feasible(x, out.witness);
  return out;
}

bool weak_l1_core_member(const StepFunction& x, int depth) {
  const DecreasingStep mu = decreasing_rearrangement(x);
  if (mu.is_zero()) return true;
  const double w = norm(mu.step(), SpaceSpec::WeakL1());
  double min_ratio = kInf;
  double t = 0.5;
  for (int n = 1; n <= depth; ++n, t *= 0.5) {
    min_ratio = std::min(min_ratio, t * mu(t) / w);
  }
  return min_ratio < 1.0 - 1e-8;
}

KolmogorovResult kolmogorov_witness(const StepFunction& x, int depth) {
  KolmogorovResult out;
  const DecreasingStep mu = decreasing_rearrangement(x);
  if (mu.is_zero()) {
    out.direct_branch = majorization_feasible(x, out.y);
    return out;
  }
  if (!weak_l1_core_member(x, depth)) {
    throw std::domain_error(
        "kolmogorov_witness: t*mu(t) does not decay on the dyadic grid; x is "
        "not in the weak-L1 core");
  }
  out.scale = norm(mu.step(), SpaceSpec::WeakL1());
  const DecreasingStep mu_hat =
      decreasing_rearrangement((1.0 / out.scale) * mu.step());

  // Deep enough that the first breakpoint of mu sits above 2^{1-depth}; the
  // direct branch is then exact all the way down.
  int d = depth;
  const double t1 = mu_hat.step().breakpoints().front();
  while (d < 1060 && std::ldexp(1.0, -d + 1) > t1) ++d;
  out.depth = d;

  const auto f_at = [&](double t) { return running_sup(mu_hat, t); };

  // y = h' on the dyadic pieces of (0,1]; h interpolates f(2^{n+1}) ->
  // f(2^{n+2}) over (2^n, 2^{n+1}).  The sub-dyadic stub keeps h linear
  // through the origin.
  std::vector<double> bp, val;
  bp.reserve(static_cast<std::size_t>(d) + 1);
  val.reserve(static_cast<std::size_t>(d) + 1);
  bp.push_back(std::ldexp(1.0, -d));
  val.push_back(f_at(std::ldexp(1.0, -d + 1)) * std::ldexp(1.0, d));
  for (int n = -d; n < 0; ++n) {
    const double lo = std::ldexp(1.0, n);
    const double hi = std::ldexp(1.0, n + 1);
    bp.push_back(hi);
    val.push_back((f_at(4.0 * lo) - f_at(2.0 * lo)) / (hi - lo));
  }
  StepFunction y_hat(std::move(bp), std::move(val));
  out.h_at_1 = f_at(2.0);
  out.y = out.scale * y_hat;

  out.direct_branch = make_certificate(x, out.y, /*probe_cap=*/1.0);
  const DecreasingStep mu_x = decreasing_rearrangement(x);
  const CalderonProfile s_mu_y =
      calderon_op(decreasing_rearrangement(out.y).step());
  out.weighted_branch_slack = kInf;
  std::vector<double> weighted_probes{1.5, 2.0, 4.0, 8.0};
  for (double t : mu_x.step().breakpoints()) {
    if (t > 1.0) weighted_probes.push_back(t);
  }
  for (double t : weighted_probes) {
    out.weighted_branch_vacuous = false;
    out.weighted_branch_slack =
        std::min(out.weighted_branch_slack, s_mu_y(t) / out.h_at_1 - mu_x(t));
  }
  return out;
}

MembershipResult range_membership(RangeDomain kind, const StepFunction& x) {
  if (kind != RangeDomain::function_l1) {
    throw std::invalid_argument(
        "range_membership: step-function input requires the function_l1 kind");
  }
  MembershipResult out;
  const DecreasingStep mu = decreasing_rearrangement(x);
  out.constant = norm(mu.step(), SpaceSpec::WeakL1());
  out.member = weak_l1_core_member(x);
  if (out.member && !mu.is_zero()) {
    out.witness_y = kolmogorov_witness(x).y;
    out.detail = "t*mu(t) decays on the dyadic grid";
  } else if (!out.member) {
    out.detail = "t*mu(t) stays at its sup across the dyadic grid";
  }
  return out;
}

MembershipResult range_membership(RangeDomain kind, const Seq& a) {
  MembershipResult out;
  const Seq mu = decreasing_rearrangement(a);
  if (mu.is_zero()) {
    out.member = true;
    out.constant = 0.0;
    out.witness_seq = Seq();
    return out;
  }
  const std::size_t len = mu.size();
  switch (kind) {
    case RangeDomain::sequence_l1: {
      // (n+1) mu(n) must stabilize: its sup has to be attained already in
      // the first half of the window, otherwise the truncation trend is
      // unbounded.
      double c = 0.0;
      double first_half = 0.0;
      for (std::size_t n = 0; n < len; ++n) {
        const double g = static_cast<double>(n + 1) * mu.entries()[n];
        c = std::max(c, g);
        if (n <= (len - 1) / 2) first_half = std::max(first_half, g);
      }
      const double tail = static_cast<double>(len) * mu.entries()[len - 1];
      out.constant = c;
      out.member = tail <= (1.0 + 1e-9) * first_half;
      if (out.member) {
        std::vector<double> w(len);
        for (std::size_t n = 0; n < len; ++n) {
          w[n] = c / static_cast<double>(n + 1);
        }
        out.witness_seq = Seq(0, std::move(w));
        out.detail = "(n+1)*mu(n) bounded by the first-half sup";
      } else {
        out.detail = "(n+1)*mu(n) still growing at the window end";
      }
      return out;
    }
    case RangeDomain::sequence_weak_l1: {
      double c = 0.0;
      for (std::size_t n = 0; n < len; ++n) {
        c = std::max(c, mu.entries()[n] * static_cast<double>(n + 1) /
                            std::log(static_cast<double>(n) + 2.0));
      }
      out.constant = c;
      out.member = true;
      std::vector<double> w(len);
      for (std::size_t n = 0; n < len; ++n) {
        w[n] = c * std::log(static_cast<double>(n) + 2.0) /
               static_cast<double>(n + 1);
      }
      out.witness_seq = Seq(0, std::move(w));
      out.detail = "minimal c with mu(n) <= c*log(n+2)/(n+1) on the support";
      return out;
    }
    case RangeDomain::function_l1:
      throw std::invalid_argument(
          "range_membership: sequence input requires a sequence kind");
  }
  throw std::invalid_argument("range_membership: unknown kind");
}

}  // namespace calderon
