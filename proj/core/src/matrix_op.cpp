#include "calderon/matrix_op.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace calderon {

struct MatrixOp::SvCache {
  std::once_flag flag;
  std::vector<double> sv;
};

MatrixOp::MatrixOp(std::size_t n)
    : n_(n), a_(n * n), cache_(std::make_unique<SvCache>()) {}

MatrixOp::MatrixOp(std::size_t n, std::vector<cplx> row_major)
    : n_(n), a_(std::move(row_major)), cache_(std::make_unique<SvCache>()) {
  if (a_.size() != n * n) {
    throw std::invalid_argument("MatrixOp: entry count must be n*n");
  }
  for (const cplx& z : a_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("MatrixOp: entries must be finite");
    }
  }
}

MatrixOp MatrixOp::identity(std::size_t n) {
  MatrixOp m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
  return m;
}

MatrixOp MatrixOp::diagonal(std::vector<double> d) {
  MatrixOp m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.a_[i * d.size() + i] = d[i];
  return m;
}

MatrixOp::MatrixOp(const MatrixOp& other)
    : n_(other.n_), a_(other.a_), cache_(std::make_unique<SvCache>()) {}

MatrixOp& MatrixOp::operator=(const MatrixOp& other) {
  if (this != &other) {
    n_ = other.n_;
    a_ = other.a_;
    cache_ = std::make_unique<SvCache>();
  }
  return *this;
}

const std::vector<double>& MatrixOp::singular_values() const {
  std::call_once(cache_->flag,
                 [this] { cache_->sv = jacobi_svd(*this).sigma; });
  return cache_->sv;
}

Seq MatrixOp::singular_value_seq() const { return Seq(0, singular_values()); }

double MatrixOp::frobenius_norm() const {
  double acc = 0.0;
  for (const cplx& z : a_) acc += std::norm(z);
  return std::sqrt(acc);
}

double MatrixOp::trace_real() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < n_; ++i) acc += a_[i * n_ + i].real();
  return acc;
}

MatrixOp MatrixOp::adjoint() const {
  MatrixOp m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      m.a_[j * n_ + i] = std::conj(a_[i * n_ + j]);
    }
  }
  return m;
}

bool MatrixOp::is_hermitian(double rel_tol) const {
  double diff = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      diff += std::norm(a_[i * n_ + j] - std::conj(a_[j * n_ + i]));
    }
  }
  return std::sqrt(diff) <= rel_tol * std::max(1e-300, frobenius_norm());
}

MatrixOp operator+(const MatrixOp& x, const MatrixOp& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("matrix dim mismatch");
  std::vector<MatrixOp::cplx> e(x.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += y.entries()[i];
  return MatrixOp(x.dim(), std::move(e));
}

MatrixOp operator-(const MatrixOp& x, const MatrixOp& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("matrix dim mismatch");
  std::vector<MatrixOp::cplx> e(x.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= y.entries()[i];
  return MatrixOp(x.dim(), std::move(e));
}

MatrixOp operator*(const MatrixOp& x, const MatrixOp& y) {
  const std::size_t n = x.dim();
  if (n != y.dim()) throw std::invalid_argument("matrix dim mismatch");
  std::vector<MatrixOp::cplx> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const MatrixOp::cplx xik = x(i, k);
      if (xik == MatrixOp::cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        e[i * n + j] += xik * y(k, j);
      }
    }
  }
  return MatrixOp(n, std::move(e));
}

MatrixOp operator*(std::complex<double> alpha, const MatrixOp& x) {
  std::vector<MatrixOp::cplx> e(x.entries());
  for (auto& z : e) z *= alpha;
  return MatrixOp(x.dim(), std::move(e));
}

MatrixOp commutator(const MatrixOp& a, const MatrixOp& b) {
  return a * b - b * a;
}

MatrixOp triangular_truncation(const MatrixOp& v) {
  const std::size_t n = v.dim();
  std::vector<MatrixOp::cplx> e(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j > k) {
        e[j * n + k] = v(j, k);
      } else if (j < k) {
        e[j * n + k] = -v(j, k);
      }
    }
  }
  return MatrixOp(n, std::move(e));
}

double schatten_norm(const MatrixOp& a, SpaceSpec spec) {
  spec.discrete = true;
  return norm(a.singular_value_seq(), spec);
}

Svd jacobi_svd(const MatrixOp& a) {
  using cplx = MatrixOp::cplx;
  const std::size_t n = a.dim();
  // Column-major working copies; g holds A * V_acc throughout.
  std::vector<cplx> g(n * n), v(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[j * n + i] = a(i, j);
    v[i * n + i] = 1.0;
  }
  const auto col = [n](std::vector<cplx>& m, std::size_t j) {
    return m.data() + j * n;
  };

  constexpr double kPairTol = 1e-12;
  constexpr int kMaxSweeps = 64;
  bool converged = (n <= 1);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cplx* gp = col(g, p);
        cplx* gq = col(g, q);
        double app = 0.0, aqq = 0.0;
        cplx apq{};
        for (std::size_t i = 0; i < n; ++i) {
          app += std::norm(gp[i]);
          aqq += std::norm(gq[i]);
          apq += std::conj(gp[i]) * gq[i];
        }
        const double mag = std::abs(apq);
        if (app == 0.0 || aqq == 0.0 || mag <= kPairTol * std::sqrt(app * aqq)) {
          continue;
        }
        converged = false;
        const cplx w = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx swc = s * std::conj(w);
        cplx* vp = col(v, p);
        cplx* vq = col(v, q);
        for (std::size_t i = 0; i < n; ++i) {
          const cplx gpi = gp[i], gqi = gq[i];
          gp[i] = c * gpi - swc * gqi;
          gq[i] = s * gpi + c * std::conj(w) * gqi;
          const cplx vpi = vp[i], vqi = vq[i];
          vp[i] = c * vpi - swc * vqi;
          vq[i] = s * vpi + c * std::conj(w) * vqi;
        }
      }
    }
  }
  if (!converged) {
    throw std::runtime_error("jacobi_svd: no convergence within sweep limit");
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::norm(g[j * n + i]);
    sigma[j] = std::sqrt(acc);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sigma[x] > sigma[y];
  });

  std::vector<cplx> u_rm(n * n), v_rm(n * n);
  std::vector<double> sigma_sorted(n);
  for (std::size_t jj = 0; jj < n; ++jj) {
    const std::size_t j = order[jj];
    sigma_sorted[jj] = sigma[j];
    for (std::size_t i = 0; i < n; ++i) {
      const cplx ui =
          sigma[j] > 0.0 ? g[j * n + i] / sigma[j] : (i == jj ? cplx{1.0} : cplx{});
      u_rm[i * n + jj] = ui;
      v_rm[i * n + jj] = v[j * n + i];
    }
  }
  return Svd{MatrixOp(n, std::move(u_rm)), std::move(sigma_sorted),
             MatrixOp(n, std::move(v_rm))};
}

}  // namespace calderon
