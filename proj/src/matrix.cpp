#include "qpr/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qpr {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

static void check_same_shape(const Matrix& x, const Matrix& y, const char* op) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  check_same_shape(x, y, "operator+");
  Matrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] = x.data()[i] + y.data()[i];
  return out;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  check_same_shape(x, y, "operator-");
  Matrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] = x.data()[i] - y.data()[i];
  return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("operator*: inner dimension mismatch");
  Matrix out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int k = 0; k < x.cols(); ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex(0.0)) continue;
      for (int j = 0; j < y.cols(); ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

Matrix operator*(Complex s, const Matrix& x) {
  Matrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] = s * x.data()[i];
  return out;
}

Matrix operator*(double s, const Matrix& x) { return Complex(s, 0.0) * x; }

double max_abs_diff(const Matrix& x, const Matrix& y) {
  check_same_shape(x, y, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < x.data().size(); ++i)
    m = std::max(m, std::abs(x.data()[i] - y.data()[i]));
  return m;
}

Matrix hermitize(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitize: matrix not square");
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermiticity_defect: matrix not square");
  double d = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

}  // namespace qpr
