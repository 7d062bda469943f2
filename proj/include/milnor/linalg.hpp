#pragma once

#include <optional>
#include <vector>

#include "milnor/rational.hpp"

namespace milnor {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns the pivot column of each
// surviving row. Rows of zeros are dropped.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

bool matrix_is_invertible(const QMatrix& m);

// Basis of the right kernel {v : m v = 0}, each vector normalized so its
// first nonzero entry is 1. Deterministic: free columns in increasing order.
std::vector<QVector> kernel_basis(const QMatrix& m, int ncols);

// Incremental row space with recorded combinations: feeding vectors one at a
// time, reports the first linear dependence as coefficients over the inputs.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int dimension) : dimension_(dimension) {}

  // Returns nullopt if v was independent (and absorbs it). Otherwise returns
  // c_0..c_{k-1} with v = sum c_i * input_i over the previously absorbed
  // vectors; dependent vectors are not absorbed and get no index.
  std::optional<QVector> add(const QVector& v);

  int rank() const { return static_cast<int>(rows_.size()); }
  bool contains(const QVector& v) const;

 private:
  struct Row {
    QVector reduced;
    QVector combo;  // coordinates over the original input sequence
    int pivot;
  };
  int dimension_;
  int inputs_ = 0;
  std::vector<Row> rows_;
};

}  // namespace milnor
