#include "milnor/linalg.hpp"

#include <stdexcept>

namespace milnor {

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivot_cols;
  if (m.empty()) return pivot_cols;
  const std::size_t ncols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivot_cols;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

bool matrix_is_invertible(const QMatrix& m) {
  if (m.empty()) return false;
  for (const auto& row : m) {
    if (row.size() != m.size()) return false;
  }
  return rank(m) == static_cast<int>(m.size());
}

std::vector<QVector> kernel_basis(const QMatrix& m, int ncols) {
  QMatrix work = m;
  for (auto& row : work) {
    if (static_cast<int>(row.size()) != ncols) {
      throw std::invalid_argument("kernel_basis: ragged matrix");
    }
  }
  std::vector<int> pivots = rref(work);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<QVector> basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    QVector v(static_cast<std::size_t>(ncols), Rational(0));
    v[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -work[r][static_cast<std::size_t>(free_col)];
    }
    // First nonzero entry is the pivot-free column with value 1 only if no
    // earlier pivot entry is nonzero; normalize explicitly.
    for (const auto& entry : v) {
      if (entry != 0) {
        Rational inv = 1 / entry;
        for (auto& e : v) e *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> IncrementalSpan::add(const QVector& v) {
  if (static_cast<int>(v.size()) != dimension_) {
    throw std::invalid_argument("IncrementalSpan: wrong vector dimension");
  }
  QVector reduced = v;
  // Expansion over the inputs of the part removed during reduction, so that
  // v = reduced + sum acc_i * input_i.
  QVector acc(static_cast<std::size_t>(inputs_), Rational(0));
  for (const auto& row : rows_) {
    Rational factor = reduced[static_cast<std::size_t>(row.pivot)];
    if (factor == 0) continue;
    for (int j = 0; j < dimension_; ++j) {
      reduced[static_cast<std::size_t>(j)] -= factor * row.reduced[static_cast<std::size_t>(j)];
    }
    for (std::size_t j = 0; j < row.combo.size(); ++j) acc[j] += factor * row.combo[j];
  }
  int pivot = -1;
  for (int j = 0; j < dimension_; ++j) {
    if (reduced[static_cast<std::size_t>(j)] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return acc;  // dependent; not absorbed

  Rational inv = 1 / reduced[static_cast<std::size_t>(pivot)];
  for (auto& e : reduced) e *= inv;
  QVector combo(static_cast<std::size_t>(inputs_) + 1, Rational(0));
  for (std::size_t j = 0; j < acc.size(); ++j) combo[j] = -inv * acc[j];
  combo[static_cast<std::size_t>(inputs_)] = inv;
  ++inputs_;
  for (auto& row : rows_) row.combo.push_back(Rational(0));
  rows_.push_back({std::move(reduced), std::move(combo), pivot});
  return std::nullopt;
}

bool IncrementalSpan::contains(const QVector& v) const {
  if (static_cast<int>(v.size()) != dimension_) {
    throw std::invalid_argument("IncrementalSpan: wrong vector dimension");
  }
  QVector reduced = v;
  for (const auto& row : rows_) {
    const Rational& c = reduced[static_cast<std::size_t>(row.pivot)];
    if (c == 0) continue;
    Rational factor = c;
    for (int j = 0; j < dimension_; ++j) {
      reduced[static_cast<std::size_t>(j)] -= factor * row.reduced[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& e : reduced) {
    if (e != 0) return false;
  }
  return true;
}

}  // namespace milnor
