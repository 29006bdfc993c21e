#ifndef GRASSMANN_MATRIX_HPP
#define GRASSMANN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "grassmann/scalar.hpp"

namespace grassmann {

/// Dense row-major matrix over an exact field. Only what the subspace code
/// needs: row reduction, rank and kernels.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form in place (leftmost pivots); returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// A basis of {x : M x = 0}, one vector per free column.
  std::vector<std::vector<Scalar>> kernel() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

}  // namespace grassmann

#endif  // GRASSMANN_MATRIX_HPP
