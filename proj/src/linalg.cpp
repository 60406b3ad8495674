#include "kss/linalg.hpp"

#include <algorithm>

#include "kss/errors.hpp"

namespace kss {

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw input_error("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw input_error("add: length mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw input_error("sub: length mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const QVec& a, const Rat& t) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
  return r;
}

bool is_zero(const QVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

QVec zero_vec(std::size_t n) { return QVec(n, Rat(0)); }

int lex_compare(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

namespace {

// Row-reduces m in place, returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(QMat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMat m) {
  if (m.empty()) return 0;
  return row_reduce(m, m[0].size()).size();
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
  if (a.size() != b.size()) throw input_error("solve_linear: row count mismatch");
  if (a.empty()) return QVec{};
  std::size_t n = a[0].size();
  QMat aug = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != n) throw input_error("solve_linear: ragged matrix");
    aug[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivots = row_reduce(aug, n);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (aug[r][n] != 0) return std::nullopt;  // 0 = nonzero row: inconsistent
  }
  QVec x = zero_vec(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
  return x;
}

QMat null_space(QMat m, std::size_t cols) {
  std::vector<std::size_t> pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  QMat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v = zero_vec(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace kss
