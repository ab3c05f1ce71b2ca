// dense.hpp — small dense row-major matrices; everything here is sized for
// desk-scale dimensions, so clarity wins over blocking tricks.

#pragma once

#include <cstddef>
#include <vector>

namespace sbkit {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

Matrix transpose(const Matrix& a);

// (a + a^T) / 2; repairs the last-bit asymmetry that products accumulate.
Matrix symmetric_part(const Matrix& a);

double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);

}  // namespace sbkit
