#pragma once

#include <optional>
#include <vector>

#include "planarop/gaussian_rational.hpp"

namespace planarop {

/// Dense row-major matrix of Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Exact Gaussian elimination for a square system. Pivot: largest |re|+|im|
/// in the column, lowest row index on ties. Returns nullopt when singular.
std::optional<std::vector<GaussianRational>> solve_linear(Matrix a, std::vector<GaussianRational> b);

std::size_t rank(Matrix a);

/// Leading principal minors det(A[0..k, 0..k]), k = 0..n-1.
std::vector<GaussianRational> leading_principal_minors(const Matrix& a);

}  // namespace planarop
