#include "kss/lp.hpp"

#include <cstddef>

#include "kss/errors.hpp"

namespace kss {

namespace {

// Dense simplex tableau for min c'z, Az = rhs, z >= 0. Columns are laid out
// as [x+ | x- | slack | artificial]; Bland's rule keeps cycling impossible.
struct Tableau {
  std::size_t rows, cols;
  QMat a;                       // rows x cols
  QVec rhs;                     // rows, kept >= 0
  QVec cost;                    // cols
  std::vector<std::size_t> basis;  // basic column per row

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = 0; j < cols; ++j) a[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Reduced cost of column j under the current basis.
  Rat reduced_cost(std::size_t j) const {
    Rat rc = cost[j];
    for (std::size_t i = 0; i < rows; ++i) rc -= cost[basis[i]] * a[i][j];
    return rc;
  }

  // Runs simplex on columns [0, active_cols); returns false on unbounded.
  bool solve(std::size_t active_cols) {
    for (;;) {
      std::size_t enter = active_cols;
      for (std::size_t j = 0; j < active_cols; ++j) {
        if (reduced_cost(j) < 0) {
          enter = j;
          break;  // Bland: lowest index
        }
      }
      if (enter == active_cols) return true;
      std::size_t leave = rows;
      Rat best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = rhs[i] / a[i][enter];
        if (leave == rows || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }

  Rat objective() const {
    Rat v = 0;
    for (std::size_t i = 0; i < rows; ++i) v += cost[basis[i]] * rhs[i];
    return v;
  }
};

}  // namespace

LpResult lp_minimize(const std::vector<Halfspace>& constraints,
                     const QVec& objective) {
  std::size_t n = objective.size();
  std::size_t m = constraints.size();
  if (n == 0) {
    // Ambient dimension 0: the single point () is feasible and optimal.
    return {LpStatus::Optimal, Rat(0), QVec{}};
  }
  std::size_t cols = 2 * n + m + m;  // x+, x-, slack, artificial
  Tableau t;
  t.rows = m;
  t.cols = cols;
  t.a.assign(m, zero_vec(cols));
  t.rhs = zero_vec(m);
  t.cost = zero_vec(cols);
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [normal, offset] = constraints[i].oriented();
    if (normal.size() != n) throw input_error("lp: dimension mismatch");
    // <normal, x> - s = offset, s >= 0; negate row if offset < 0.
    Rat sgn = offset < 0 ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) {
      t.a[i][j] = sgn * normal[j];
      t.a[i][n + j] = -sgn * normal[j];
    }
    t.a[i][2 * n + i] = -sgn;
    t.a[i][2 * n + m + i] = 1;
    t.rhs[i] = sgn * offset;
    t.basis[i] = 2 * n + m + i;
  }

  // Phase 1: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i) t.cost[2 * n + m + i] = 1;
  t.solve(2 * n + m);
  if (t.objective() != 0) return {LpStatus::Infeasible, Rat(0), {}};
  // Drive leftover artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < 2 * n + m) continue;
    std::size_t c = 0;
    while (c < 2 * n + m && t.a[i][c] == 0) ++c;
    if (c < 2 * n + m) t.pivot(i, c);
    // else: redundant row; harmless to leave, its artificial stays 0.
  }

  // Phase 2: original objective on the x columns.
  t.cost = zero_vec(cols);
  for (std::size_t j = 0; j < n; ++j) {
    t.cost[j] = objective[j];
    t.cost[n + j] = -objective[j];
  }
  for (std::size_t i = 0; i < m; ++i) t.cost[2 * n + m + i] = 0;
  if (!t.solve(2 * n + m)) return {LpStatus::Unbounded, Rat(0), {}};

  QVec x = zero_vec(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) {
      x[t.basis[i]] += t.rhs[i];
    } else if (t.basis[i] < 2 * n) {
      x[t.basis[i] - n] -= t.rhs[i];
    }
  }
  return {LpStatus::Optimal, t.objective(), std::move(x)};
}

LpResult lp_maximize(const std::vector<Halfspace>& constraints,
                     const QVec& objective) {
  LpResult r = lp_minimize(constraints, scale(objective, Rat(-1)));
  if (r.status == LpStatus::Optimal) r.value = -r.value;
  return r;
}

}  // namespace kss
