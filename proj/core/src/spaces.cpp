#include "calderon/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "calderon/rearrangement.hpp"

namespace calderon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Maximizes a continuous objective on [a, b] by golden-section search with
// the endpoints as extra candidates.  Unimodality is not assumed; the
// endpoint candidates keep the result correct when the interior search
// converges to a local maximum.
template <typename F>
double golden_section_max(F&& g, double a, double b, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = g(x1);
  double f2 = g(x2);
  double lo = a, hi = b;
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = g(x1);
    }
  }
  return std::max({g(a), g(b), f1, f2});
}

double lp_norm_function(const StepFunction& x, double p) {
  if (p == kInf) return x.max_abs();
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < x.piece_count(); ++i) {
    acc += std::pow(std::abs(x.values()[i]), p) * (x.breakpoints()[i] - prev);
    prev = x.breakpoints()[i];
  }
  return std::pow(acc, 1.0 / p);
}

double weak_l1_function(const DecreasingStep& mu) {
  // sup_{t>0} t * mu(t); per piece the sup sits at the right endpoint.
  double best = 0.0;
  const auto& f = mu.step();
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    best = std::max(best, f.breakpoints()[i] * f.values()[i]);
  }
  return best;
}

double m1inf_function(const DecreasingStep& mu) {
  // sup_{t>0} (1/log(1+t)) int_0^t mu.  The cumulative integral is piecewise
  // linear; each piece is scanned with endpoint candidates plus a
  // golden-section pass (tol 1e-10).
  const auto& f = mu.step();
  double best = 0.0;
  double prev = 0.0;
  double cum = 0.0;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const double v = f.values()[i];
    const double lo = prev;
    const double hi = f.breakpoints()[i];
    const double base = cum;
    auto g = [&](double t) { return (base + v * (t - lo)) / std::log1p(t); };
    best = std::max(best, golden_section_max(g, std::max(lo, 1e-300), hi,
                                             1e-10 * std::max(1.0, hi - lo)));
    cum += v * (hi - lo);
    prev = hi;
  }
  // Beyond the support the numerator is constant and log(1+t) grows, so the
  // sup over [t_n, inf) is at t_n, already covered.
  return best;
}

double lorentz_function(const DecreasingStep& mu, const PhiSpec& phi) {
  const auto& f = mu.step();
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    acc += f.values()[i] * (phi(f.breakpoints()[i]) - phi(prev));
    prev = f.breakpoints()[i];
  }
  return acc;
}

double l1_plus_linf_function(const DecreasingStep& mu) {
  return mu.step().integral_to(1.0);
}

double lp_norm_seq(const Seq& a, double p) {
  if (p == kInf) {
    double m = 0.0;
    for (double e : a.entries()) m = std::max(m, std::abs(e));
    return m;
  }
  double acc = 0.0;
  for (double e : a.entries()) acc += std::pow(std::abs(e), p);
  return std::pow(acc, 1.0 / p);
}

double lorentz_seq(const Seq& mu, const PhiSpec& phi) {
  // For phi = log(1+t) the sequence norm is sum mu(n)/(n+1); other weights
  // use the difference form sum mu(n) (phi(n+1) - phi(n)).
  double acc = 0.0;
  for (std::size_t n = 0; n < mu.size(); ++n) {
    const double w = phi.kind() == PhiSpec::Kind::log1p
                         ? 1.0 / static_cast<double>(n + 1)
                         : phi(static_cast<double>(n + 1)) -
                               phi(static_cast<double>(n));
    acc += mu.entries()[n] * w;
  }
  return acc;
}

void require_p(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw std::domain_error("SpaceSpec: p must satisfy p >= 1");
  }
}

}  // namespace

PhiSpec PhiSpec::log1p() { return PhiSpec(Kind::log1p); }
PhiSpec PhiSpec::t_log_e_over_t() { return PhiSpec(Kind::t_log_e_over_t); }
PhiSpec PhiSpec::zygmund() { return PhiSpec(Kind::zygmund); }

PhiSpec PhiSpec::piecewise_linear(std::vector<double> breakpoints,
                                  std::vector<double> slopes) {
  if (breakpoints.size() != slopes.size() || breakpoints.empty()) {
    throw std::invalid_argument("PhiSpec: breakpoints/slopes size mismatch");
  }
  double prev_t = 0.0;
  double prev_s = kInf;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i] <= prev_t) {
      throw std::invalid_argument("PhiSpec: breakpoints must increase");
    }
    if (slopes[i] < 0.0 || slopes[i] > prev_s) {
      throw std::invalid_argument(
          "PhiSpec: slopes must be nonnegative and nonincreasing (concavity)");
    }
    prev_t = breakpoints[i];
    prev_s = slopes[i];
  }
  PhiSpec spec(Kind::piecewise_linear);
  spec.pl_breaks_ = std::move(breakpoints);
  spec.pl_slopes_ = std::move(slopes);
  return spec;
}

double PhiSpec::operator()(double t) const {
  if (t <= 0.0) return 0.0;
  switch (kind_) {
    case Kind::log1p:
      return std::log1p(t);
    case Kind::t_log_e_over_t:
      return t >= 1.0 ? 1.0 : t * std::log(M_E / t);
    case Kind::zygmund:
      return t <= 1.0 ? t * std::log(M_E * M_E / t) : 2.0 * std::log(M_E * t);
    case Kind::piecewise_linear: {
      double acc = 0.0;
      double prev = 0.0;
      for (std::size_t i = 0; i < pl_breaks_.size(); ++i) {
        const double hi = std::min(pl_breaks_[i], t);
        if (hi <= prev) break;
        acc += pl_slopes_[i] * (hi - prev);
        prev = pl_breaks_[i];
        if (t <= pl_breaks_[i]) break;
      }
      // Constant beyond the last breakpoint (slope 0 extension).
      return acc;
    }
  }
  return 0.0;
}

std::string PhiSpec::name() const {
  switch (kind_) {
    case Kind::log1p:
      return "log1p";
    case Kind::t_log_e_over_t:
      return "tloge";
    case Kind::zygmund:
      return "psi";
    case Kind::piecewise_linear:
      return "pwl";
  }
  return "?";
}

SpaceSpec SpaceSpec::Lp(double p, bool discrete) {
  require_p(p);
  SpaceSpec s;
  s.kind = Kind::lp;
  s.p = p;
  s.discrete = discrete;
  return s;
}
SpaceSpec SpaceSpec::WeakL1(bool discrete) {
  SpaceSpec s;
  s.kind = Kind::weak_l1;
  s.discrete = discrete;
  return s;
}
SpaceSpec SpaceSpec::M1Inf(bool discrete) {
  SpaceSpec s;
  s.kind = Kind::m1inf;
  s.discrete = discrete;
  return s;
}
SpaceSpec SpaceSpec::Lorentz(PhiSpec phi, bool discrete) {
  SpaceSpec s;
  s.kind = Kind::lorentz;
  s.phi = std::move(phi);
  s.discrete = discrete;
  return s;
}
SpaceSpec SpaceSpec::L1CapLInf(bool discrete) {
  SpaceSpec s;
  s.kind = Kind::l1_cap_linf;
  s.discrete = discrete;
  return s;
}
SpaceSpec SpaceSpec::L1PlusLInf(bool discrete) {
  SpaceSpec s;
  s.kind = Kind::l1_plus_linf;
  s.discrete = discrete;
  return s;
}

SpaceSpec SpaceSpec::parse(std::string_view text, bool discrete) {
  if (text == "weak-l1") return WeakL1(discrete);
  if (text == "m1inf") return M1Inf(discrete);
  if (text == "l1+linf") return L1PlusLInf(discrete);
  if (text == "l1^linf") return L1CapLInf(discrete);
  if (text.rfind("lp:", 0) == 0) {
    const std::string_view arg = text.substr(3);
    if (arg == "inf") return Lp(kInf, discrete);
    try {
      return Lp(std::stod(std::string(arg)), discrete);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("SpaceSpec: bad exponent in '" +
                                  std::string(text) + "'");
    }
  }
  if (text.rfind("lorentz:", 0) == 0) {
    const std::string_view arg = text.substr(8);
    if (arg == "log1p") return Lorentz(PhiSpec::log1p(), discrete);
    if (arg == "tloge") return Lorentz(PhiSpec::t_log_e_over_t(), discrete);
    if (arg == "psi") return Lorentz(PhiSpec::zygmund(), discrete);
    throw std::invalid_argument("SpaceSpec: unknown Lorentz weight '" +
                                std::string(arg) + "'");
  }
  throw std::invalid_argument("SpaceSpec: cannot parse '" + std::string(text) +
                              "'");
}

std::string SpaceSpec::to_string() const {
  switch (kind) {
    case Kind::lp:
      return p == kInf ? "lp:inf" : "lp:" + std::to_string(p);
    case Kind::weak_l1:
      return "weak-l1";
    case Kind::m1inf:
      return "m1inf";
    case Kind::lorentz:
      return "lorentz:" + phi->name();
    case Kind::l1_cap_linf:
      return "l1^linf";
    case Kind::l1_plus_linf:
      return "l1+linf";
  }
  return "?";
}

double norm(const StepFunction& x, const SpaceSpec& spec) {
  if (spec.discrete) {
    throw std::invalid_argument(
        "norm: discrete space spec applied to a step function; use a Seq");
  }
  switch (spec.kind) {
    case SpaceSpec::Kind::lp:
      require_p(spec.p);
      return lp_norm_function(x, spec.p);
    case SpaceSpec::Kind::weak_l1:
      return weak_l1_function(decreasing_rearrangement(x));
    case SpaceSpec::Kind::m1inf:
      return m1inf_function(decreasing_rearrangement(x));
    case SpaceSpec::Kind::lorentz:
      return lorentz_function(decreasing_rearrangement(x), *spec.phi);
    case SpaceSpec::Kind::l1_cap_linf:
      return std::max(lp_norm_function(x, 1.0), x.max_abs());
    case SpaceSpec::Kind::l1_plus_linf:
      return l1_plus_linf_function(decreasing_rearrangement(x));
  }
  throw std::invalid_argument("norm: unknown space kind");
}

double norm(const Seq& a, const SpaceSpec& spec) {
  if (!spec.discrete) {
    throw std::invalid_argument(
        "norm: function space spec applied to a sequence; use a StepFunction");
  }
  const Seq mu = decreasing_rearrangement(a);
  switch (spec.kind) {
    case SpaceSpec::Kind::lp:
      require_p(spec.p);
      return lp_norm_seq(mu, spec.p);
    case SpaceSpec::Kind::weak_l1: {
      double best = 0.0;
      for (std::size_t n = 0; n < mu.size(); ++n) {
        best = std::max(best, static_cast<double>(n + 1) * mu.entries()[n]);
      }
      return best;
    }
    case SpaceSpec::Kind::m1inf: {
      // The partial sums are constant beyond the support while log(2+n)
      // grows, so scanning the support is exact.
      double best = 0.0;
      double cum = 0.0;
      for (std::size_t n = 0; n < mu.size(); ++n) {
        cum += mu.entries()[n];
        best = std::max(best, cum / std::log(2.0 + static_cast<double>(n)));
      }
      return best;
    }
    case SpaceSpec::Kind::lorentz:
      return lorentz_seq(mu, *spec.phi);
    case SpaceSpec::Kind::l1_cap_linf:
      return std::max(lp_norm_seq(mu, 1.0), lp_norm_seq(mu, kInf));
    case SpaceSpec::Kind::l1_plus_linf:
      return mu.is_zero() ? 0.0 : mu.entries().front();
  }
  throw std::invalid_argument("norm: unknown space kind");
}

double sup_p_blowup(const Seq& a, std::span<const double> p_grid) {
  if (p_grid.empty()) {
    throw std::invalid_argument("sup_p_blowup: empty exponent grid");
  }
  double best = 0.0;
  for (double p : p_grid) {
    if (!(p > 1.0) || p > 2.0) {
      throw std::domain_error("sup_p_blowup: grid exponents must lie in (1, 2]");
    }
    best = std::max(best, (p - 1.0) * lp_norm_seq(a, p));
  }
  return best;
}

double llogl_functional(const StepFunction& x) {
  const StepFunction mu = decreasing_rearrangement(x).step();
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < mu.piece_count(); ++i) {
    const double hi = std::min(mu.breakpoints()[i], 1.0);
    if (hi <= prev) break;
    const double v = mu.values()[i];
    if (v > 1.0) acc += v * std::log(v) * (hi - prev);
    prev = mu.breakpoints()[i];
    if (prev >= 1.0) break;
  }
  return acc;
}

}  // namespace calderon
