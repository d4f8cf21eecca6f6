#include "calderon/doi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace calderon {

LipschitzFn::LipschitzFn(std::string name, std::function<double(double)> f,
                         double lip)
    : name_(std::move(name)), f_(std::move(f)), lip_(lip) {
  if (!(lip_ >= 0.0) || !std::isfinite(lip_)) {
    throw std::invalid_argument("LipschitzFn: bound must be finite and >= 0");
  }
}

LipschitzFn LipschitzFn::absolute_value() {
  return LipschitzFn("abs", [](double x) { return std::abs(x); }, 1.0);
}

LipschitzFn LipschitzFn::sine() {
  return LipschitzFn("sin", [](double x) { return std::sin(x); }, 1.0);
}

LipschitzFn LipschitzFn::square(double radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("LipschitzFn::square: radius must be positive");
  }
  return LipschitzFn("square", [](double x) { return x * x; }, 2.0 * radius);
}

LipschitzFn LipschitzFn::piecewise_linear(std::vector<double> xs,
                                          std::vector<double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument(
        "LipschitzFn::piecewise_linear: need matching lists of >= 2 nodes");
  }
  double lip = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw std::invalid_argument(
          "LipschitzFn::piecewise_linear: nodes must strictly increase");
    }
    lip = std::max(lip, std::abs(ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]));
  }
  auto eval = [xs = std::move(xs), ys = std::move(ys)](double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs.begin());
    const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + w * (ys[i] - ys[i - 1]);
  };
  return LipschitzFn("pw-linear", std::move(eval), lip);
}

HermitianEigen hermitian_eigen(const MatrixOp& a) {
  using cplx = MatrixOp::cplx;
  if (!a.is_hermitian()) {
    throw std::domain_error("hermitian_eigen: matrix is not hermitian");
  }
  const std::size_t n = a.dim();
  std::vector<cplx> h(a.entries());
  std::vector<cplx> u(n * n);
  for (std::size_t i = 0; i < n; ++i) u[i * n + i] = 1.0;

  const double fro = std::max(1e-300, a.frobenius_norm());
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += std::norm(h[i * n + j]);
      }
    }
    if (std::sqrt(off) <= 1e-13 * fro) break;
    if (sweep == kMaxSweeps - 1) {
      throw std::runtime_error("hermitian_eigen: no convergence");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx hpq = h[p * n + q];
        const double mag = std::abs(hpq);
        if (mag <= 1e-300) continue;
        const double hpp = h[p * n + p].real();
        const double hqq = h[q * n + q].real();
        const cplx w = hpq / mag;
        const double tau = (hqq - hpp) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx wc = std::conj(w);
        // Columns: H <- H R with R_{pp}=c, R_{pq}=s, R_{qp}=-s*conj(w),
        // R_{qq}=c*conj(w); then rows: H <- R^H H.  Same R applied to U.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx hip = h[i * n + p], hiq = h[i * n + q];
          h[i * n + p] = c * hip - s * wc * hiq;
          h[i * n + q] = s * hip + c * wc * hiq;
          const cplx uip = u[i * n + p], uiq = u[i * n + q];
          u[i * n + p] = c * uip - s * wc * uiq;
          u[i * n + q] = s * uip + c * wc * uiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cplx hpj = h[p * n + j], hqj = h[q * n + j];
          h[p * n + j] = c * hpj - s * w * hqj;
          h[q * n + j] = s * hpj + c * w * hqj;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = h[i * n + i].real();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return eig[x] < eig[y]; });
  std::vector<double> eig_sorted(n);
  std::vector<cplx> u_sorted(n * n);
  for (std::size_t jj = 0; jj < n; ++jj) {
    eig_sorted[jj] = eig[order[jj]];
    for (std::size_t i = 0; i < n; ++i) {
      u_sorted[i * n + jj] = u[i * n + order[jj]];
    }
  }
  return HermitianEigen{std::move(eig_sorted), MatrixOp(n, std::move(u_sorted))};
}

MatrixOp matrix_function(const MatrixOp& a, const LipschitzFn& f) {
  const HermitianEigen ed = hermitian_eigen(a);
  std::vector<double> fd(ed.eigenvalues.size());
  for (std::size_t i = 0; i < fd.size(); ++i) fd[i] = f(ed.eigenvalues[i]);
  return ed.u * MatrixOp::diagonal(std::move(fd)) * ed.u.adjoint();
}

MatrixOp double_operator_integral(const MatrixOp& a, const LipschitzFn& f,
                                  const MatrixOp& v) {
  if (a.dim() != v.dim()) {
    throw std::invalid_argument("double_operator_integral: dim mismatch");
  }
  const HermitianEigen ed = hermitian_eigen(a);
  const std::size_t n = a.dim();
  MatrixOp vt = ed.u.adjoint() * v * ed.u;
  std::vector<MatrixOp::cplx> e(vt.entries());
  for (std::size_t i = 0; i < n; ++i) {
    const double li = ed.eigenvalues[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double lj = ed.eigenvalues[j];
      const double coincide =
          1e-12 * std::max({1.0, std::abs(li), std::abs(lj)});
      const double m =
          std::abs(li - lj) <= coincide ? 0.0 : (f(li) - f(lj)) / (li - lj);
      e[i * n + j] *= m;
    }
  }
  return ed.u * MatrixOp(n, std::move(e)) * ed.u.adjoint();
}

CommutatorCheck lipschitz_commutator_check(const MatrixOp& a,
                                           const MatrixOp& b,
                                           const LipschitzFn& f,
                                           const SpaceSpec& spec_e,
                                           const SpaceSpec& spec_f) {
  if (!a.is_hermitian() || !b.is_hermitian()) {
    throw std::domain_error("lipschitz_commutator_check: inputs must be hermitian");
  }
  CommutatorCheck out;
  out.n = a.dim();
  const HermitianEigen ea = hermitian_eigen(a);
  const HermitianEigen eb = hermitian_eigen(b);
  out.spectrum_a = ea.eigenvalues;
  out.spectrum_b = eb.eigenvalues;

  const MatrixOp ab = commutator(a, b);
  const double denom_scale = a.frobenius_norm() * b.frobenius_norm();
  if (ab.frobenius_norm() <= 1e-14 * std::max(1.0, denom_scale)) {
    out.degenerate = true;
    return out;
  }
  const MatrixOp fab = commutator(matrix_function(a, f), b);
  const double num = schatten_norm(fab, spec_f);
  const double den = f.lip() * schatten_norm(ab, spec_e);
  out.ratio = num / den;

  const bool both_l2 = spec_e.kind == SpaceSpec::Kind::lp && spec_e.p == 2.0 &&
                       spec_f.kind == SpaceSpec::Kind::lp && spec_f.p == 2.0;
  if (both_l2 && out.ratio > 1.0 + 1e-10) {
    throw std::logic_error(
        "lipschitz_commutator_check: Frobenius contraction violated");
  }
  return out;
}

}  // namespace calderon
