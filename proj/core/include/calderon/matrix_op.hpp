#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "calderon/seq.hpp"
#include "calderon/spaces.hpp"

namespace calderon {

// Dense complex n x n matrix, immutable after construction, with lazily
// computed and cached singular values (thread-safe).
class MatrixOp {
 public:
  using cplx = std::complex<double>;

  MatrixOp() : MatrixOp(0) {}
  explicit MatrixOp(std::size_t n);  // zero matrix
  MatrixOp(std::size_t n, std::vector<cplx> row_major);
  static MatrixOp identity(std::size_t n);
  static MatrixOp diagonal(std::vector<double> d);

  std::size_t dim() const { return n_; }
  cplx operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  const std::vector<cplx>& entries() const { return a_; }

  // Descending singular values via the in-repo one-sided Jacobi SVD.
  const std::vector<double>& singular_values() const;
  Seq singular_value_seq() const;

  double frobenius_norm() const;
  double trace_real() const;
  MatrixOp adjoint() const;
  bool is_hermitian(double rel_tol = 1e-10) const;

  MatrixOp(const MatrixOp& other);
  MatrixOp& operator=(const MatrixOp& other);
  MatrixOp(MatrixOp&&) noexcept = default;
  MatrixOp& operator=(MatrixOp&&) noexcept = default;
  ~MatrixOp() = default;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
  struct SvCache;
  mutable std::unique_ptr<SvCache> cache_;
};

MatrixOp operator+(const MatrixOp& x, const MatrixOp& y);
MatrixOp operator-(const MatrixOp& x, const MatrixOp& y);
MatrixOp operator*(const MatrixOp& x, const MatrixOp& y);
MatrixOp operator*(std::complex<double> alpha, const MatrixOp& x);
MatrixOp commutator(const MatrixOp& a, const MatrixOp& b);

// Entrywise (T V)_{jk} = sgn(j - k) V_{jk}: diagonal zeroed, strictly lower
// part kept, strictly upper part negated.
MatrixOp triangular_truncation(const MatrixOp& v);

// ||mu(A)||_E for a sequence-realized symmetric space; the spec's discrete
// flag is implied by the matrix argument.
double schatten_norm(const MatrixOp& a, SpaceSpec spec);

// Full decomposition A = U diag(sigma) V^H, sigma descending.
struct Svd {
  MatrixOp u;
  std::vector<double> sigma;
  MatrixOp v;
};
Svd jacobi_svd(const MatrixOp& a);

}  // namespace calderon
