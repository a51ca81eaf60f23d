#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qpr {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Desk-scale only; no view/expression
// machinery, every operation materializes its result.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  Matrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Complex> a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(Complex s, const Matrix& x);
Matrix operator*(double s, const Matrix& x);

// Largest entrywise |x - y|.
double max_abs_diff(const Matrix& x, const Matrix& y);

// (M + M†)/2; squares only.
Matrix hermitize(const Matrix& m);

// Largest entrywise deviation from M = M†.
double hermiticity_defect(const Matrix& m);

}  // namespace qpr
