#include "monosym/qlinalg.hpp"

#include <stdexcept>

namespace monosym {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QVector QMatrix::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  QVector out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
  return out;
}

std::pair<QMatrix, std::vector<int>> rref(QMatrix m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    // pick the nonzero entry of smallest bit size as pivot
    int best = -1;
    std::size_t best_bits = 0;
    for (int r = row; r < m.rows(); ++r) {
      if (m.at(r, col) == 0) continue;
      const std::size_t bits = rat_bit_size(m.at(r, col));
      if (best < 0 || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(best, c));
    const Rational inv = Rational(1) / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const QMatrix& m) {
  return static_cast<int>(rref(m).second.size());
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("rhs length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  QVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(static_cast<int>(i), m.cols());
  return x;
}

}  // namespace monosym
