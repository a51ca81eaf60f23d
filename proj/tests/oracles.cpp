#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace qpr::oracles {

Complex det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  const int n = m.rows();
  Matrix a = m;
  Complex d = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      d = -d;
    }
    d *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return d;
}

std::vector<double> eig2x2(const HermitianOperator& a) {
  if (a.dim() != 2) throw std::invalid_argument("eig2x2: dim != 2");
  const double p = a(0, 0).real();
  const double q = a(1, 1).real();
  const double mean = 0.5 * (p + q);
  const double rad = std::sqrt(0.25 * (p - q) * (p - q) + std::norm(a(0, 1)));
  return {mean - rad, mean + rad};
}

double harmonic_psi(int n, double x) {
  const double psi0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return psi0;
  double prev = psi0;
  double cur = std::sqrt(2.0) * x * psi0;
  for (int k = 2; k <= n; ++k) {
    const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex wigner_kernel_quadrature(int m, int n, double q, double p) {
  const double half_width = 20.0;
  const int nodes = 4001;
  const double h = 2.0 * half_width / (nodes - 1);
  Complex acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double y = -half_width + i * h;
    const double w = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
    const Complex phase(std::cos(p * y), -std::sin(p * y));
    acc += w * phase * harmonic_psi(m, q + 0.5 * y) * harmonic_psi(n, q - 0.5 * y);
  }
  return acc * (h / (2.0 * M_PI));
}

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Generalized Laguerre by its explicit binomial sum (small n only).
double laguerre_sum(int n, int k, double x) {
  double acc = 0.0;
  double xi = 1.0;          // x^i / i!
  for (int i = 0; i <= n; ++i) {
    acc += ((i % 2 == 0) ? 1.0 : -1.0) * binomial(n + k, n - i) * xi;
    xi *= x / (i + 1);
  }
  return acc;
}

// <a| D(alpha) |b> via the displacement-operator matrix elements.
Complex displacement_element(int a, int b, Complex alpha) {
  const double x = std::norm(alpha);
  if (a >= b) {
    Complex pref = std::exp(-0.5 * x);
    for (int i = b + 1; i <= a; ++i) pref *= alpha / std::sqrt(static_cast<double>(i));
    return pref * laguerre_sum(b, a - b, x);
  }
  Complex pref = std::exp(-0.5 * x);
  for (int i = a + 1; i <= b; ++i) pref *= -std::conj(alpha) / std::sqrt(static_cast<double>(i));
  return pref * laguerre_sum(a, b - a, x);
}

}  // namespace

double wigner_char_route(const Matrix& rho, double q, double p) {
  const int dim = rho.rows();
  const double half_width = 10.0;
  const int nodes = 401;
  const double h = 2.0 * half_width / (nodes - 1);
  Complex acc = 0.0;
  for (int is = 0; is < nodes; ++is) {
    const double sigma = -half_width + is * h;
    const double ws = (is == 0 || is == nodes - 1) ? 0.5 : 1.0;
    for (int iu = 0; iu < nodes; ++iu) {
      const double mu = -half_width + iu * h;
      const double wu = (iu == 0 || iu == nodes - 1) ? 0.5 : 1.0;
      const Complex alpha(-sigma / std::sqrt(2.0), mu / std::sqrt(2.0));
      Complex phi = 0.0;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          if (rho(b, a) == Complex(0.0)) continue;
          // Tr(D rho) = sum_{ab} <a|D|b> rho_{ba}
          phi += displacement_element(a, b, alpha) * rho(b, a);
        }
      const double arg = -(sigma * p + mu * q);
      acc += ws * wu * phi * Complex(std::cos(arg), std::sin(arg));
    }
  }
  acc *= h * h / (4.0 * M_PI * M_PI);
  return acc.real();
}

HermitianOperator sigma_x() {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return HermitianOperator(std::move(m));
}

HermitianOperator sigma_y() {
  Matrix m(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return HermitianOperator(std::move(m));
}

HermitianOperator sigma_z() {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return HermitianOperator(std::move(m));
}

}  // namespace qpr::oracles
