#include "calderon/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace calderon {

namespace {

constexpr double kEps = 1e-9;

// Tableau simplex over rows of basic variables.  Columns: n structural,
// m surplus, m artificial, then the rhs.  Bland's rule on both the entering
// and leaving choice prevents cycling.
class Tableau {
 public:
  Tableau(const LinearProgram& lp)
      : n_(lp.objective.size()), m_(lp.rhs.size()) {
    const std::size_t cols = n_ + 2 * m_ + 1;
    t_.assign(m_, std::vector<double>(cols, 0.0));
    basis_.resize(m_);
    in_basis_.assign(n_ + 2 * m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.constraints[i].size() != n_) {
        throw std::invalid_argument("simplex: constraint row size mismatch");
      }
      // Row form: A x - s = b, normalized so the rhs is nonnegative.
      const double sign = lp.rhs[i] >= 0.0 ? 1.0 : -1.0;
      for (std::size_t j = 0; j < n_; ++j) {
        t_[i][j] = sign * lp.constraints[i][j];
      }
      t_[i][n_ + i] = -sign;
      t_[i][n_ + m_ + i] = 1.0;
      t_[i].back() = sign * lp.rhs[i];
      basis_[i] = n_ + m_ + i;
      in_basis_[basis_[i]] = true;
    }
  }

  void run_phase(const std::vector<double>& cost, bool forbid_artificials) {
    // Reduced costs z_j = c_j - c_B . B^{-1} A_j computed on demand.
    const std::size_t limit = n_ + (forbid_artificials ? m_ : 2 * m_);
    for (std::size_t iter = 0; iter < 200000; ++iter) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        double red = cost[j];
        for (std::size_t i = 0; i < m_; ++i) red -= cost[basis_[i]] * t_[i][j];
        if (red < -kEps) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter == limit) return;  // optimal
      std::size_t leave = m_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] > kEps) {
          const double ratio = t_[i].back() / t_[i][enter];
          if (ratio < best_ratio - kEps ||
              (ratio < best_ratio + kEps &&
               (leave == m_ || basis_[i] < basis_[leave]))) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave == m_) throw std::runtime_error("simplex: unbounded program");
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: iteration limit exceeded");
  }

  double objective_value(const std::vector<double>& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * t_[i].back();
    return v;
  }

  // Pivots any artificial variables still basic (at value 0 after a feasible
  // phase 1) out of the basis where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + m_) continue;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (std::abs(t_[i][j]) > kEps) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<double> solution() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_[i].back();
    }
    return x;
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

 private:
  bool is_basic(std::size_t j) const { return in_basis_[j]; }

  void pivot(std::size_t row, std::size_t col) {
    const double pv = t_[row][col];
    for (double& e : t_[row]) e /= pv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double factor = t_[i][col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        t_[i][j] -= factor * t_[row][j];
      }
    }
    in_basis_[basis_[row]] = false;
    in_basis_[col] = true;
    basis_[row] = col;
  }

  std::size_t n_, m_;
  std::vector<std::vector<double>> t_;
  std::vector<std::size_t> basis_;
  std::vector<char> in_basis_;
};

}  // namespace

LpSolution solve_min(const LinearProgram& lp) {
  if (lp.constraints.size() != lp.rhs.size()) {
    throw std::invalid_argument("simplex: constraints/rhs size mismatch");
  }
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rhs.size();
  Tableau tab(lp);

  // Phase 1: drive the artificial variables to zero.
  std::vector<double> phase1(n + 2 * m, 0.0);
  for (std::size_t j = n + m; j < n + 2 * m; ++j) phase1[j] = 1.0;
  tab.run_phase(phase1, /*forbid_artificials=*/false);
  if (tab.objective_value(phase1) > 1e-7) {
    throw std::runtime_error("simplex: infeasible program");
  }
  tab.expel_artificials();

  // Phase 2: the real objective over structural + surplus columns.
  std::vector<double> phase2(n + 2 * m, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  tab.run_phase(phase2, /*forbid_artificials=*/true);

  LpSolution sol;
  sol.x = tab.solution();
  sol.value = tab.objective_value(phase2);
  return sol;
}

}  // namespace calderon
