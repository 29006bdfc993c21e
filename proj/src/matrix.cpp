#include "grassmann/matrix.hpp"

#include <utility>

namespace grassmann {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(field, 0)) {}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t found = row;
    while (found < rows_ && (*this)(found, col).is_zero()) ++found;
    if (found == rows_) continue;
    if (found != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(found, c), (*this)(row, c));
    }
    const Scalar inv = Scalar(field_, 1) / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      const Scalar factor = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) {
        if (!(*this)(row, c).is_zero()) (*this)(r, c) -= factor * (*this)(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
  Matrix reduced = *this;
  const auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar(field_, 0));
    v[free] = Scalar(field_, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace grassmann
