#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monosym/rational.hpp"

namespace monosym {

using QVector = std::vector<Rational>;

/// Dense exact rational matrix; the engine behind every rank, kernel and
/// decomposition claim. Row-major storage.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  static QMatrix identity(int n);
  QVector apply(const QVector& v) const;  // m * v
  bool operator==(const QMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Reduced row-echelon form plus the strictly increasing pivot column list.
// Pivot rows are chosen by smallest coefficient bit size to limit blowup.
std::pair<QMatrix, std::vector<int>> rref(QMatrix m);

int rank(const QMatrix& m);

// Standard free-variable generators of the null space; each vector has a 1
// in its free coordinate and zeros in the other free coordinates.
std::vector<QVector> kernel_basis(const QMatrix& m);

// One exact solution of m*x = b, or nullopt when the system is inconsistent.
// Free variables are set to zero, so a unique solution is returned as such.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

}  // namespace monosym
