#include "calderon/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace calderon {

MatrixOp random_ginibre(Rng& rng, std::size_t n) {
  std::vector<MatrixOp::cplx> e(n * n);
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  for (auto& z : e) {
    z = MatrixOp::cplx(rng.normal(), rng.normal()) * scale;
  }
  return MatrixOp(n, std::move(e));
}

MatrixOp random_gue(Rng& rng, std::size_t n) {
  const MatrixOp g = random_ginibre(rng, n);
  return 0.5 * (g + g.adjoint());
}

MatrixOp random_positive(Rng& rng, std::size_t n) {
  const MatrixOp g = random_ginibre(rng, n);
  return g * g.adjoint();
}

DecreasingStep random_decreasing_step(Rng& rng, int max_pieces, double t_lo,
                                      double t_hi) {
  const int k = rng.uniform_int(1, max_pieces);
  std::vector<double> bp(static_cast<std::size_t>(k));
  const double llo = std::log(t_lo), lhi = std::log(t_hi);
  for (double& t : bp) t = std::exp(rng.uniform(llo, lhi));
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  std::vector<double> v(bp.size());
  for (double& e : v) e = std::exp(rng.uniform(-3.0, 3.0));
  std::sort(v.begin(), v.end(), std::greater<double>());
  return DecreasingStep(StepFunction(std::move(bp), std::move(v)));
}

StepFunction random_signed_step(Rng& rng, int max_pieces, double t_lo,
                                double t_hi) {
  const int k = rng.uniform_int(1, max_pieces);
  std::vector<double> bp(static_cast<std::size_t>(k));
  const double llo = std::log(t_lo), lhi = std::log(t_hi);
  for (double& t : bp) t = std::exp(rng.uniform(llo, lhi));
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  std::vector<double> v(bp.size());
  for (double& e : v) {
    e = rng.uniform(-1.0, 1.0) * std::exp(rng.uniform(-2.0, 2.0));
  }
  return StepFunction(std::move(bp), std::move(v));
}

}  // namespace calderon
