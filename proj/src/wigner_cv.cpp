#include "qpr/wigner_cv.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpr/operator_core.hpp"

namespace qpr {

FockState make_fock_state(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("make_fock_state: matrix not square");
  const int dim = m.rows();
  if (dim < 1) throw std::invalid_argument("make_fock_state: empty matrix");
  if (dim - 1 > kMaxFockCutoff)
    throw std::invalid_argument("make_fock_state: cutoff " + std::to_string(dim - 1) +
                                " exceeds maximum " + std::to_string(kMaxFockCutoff));
  if (hermiticity_defect(m) > 1e-10)
    throw std::invalid_argument("make_fock_state: matrix is not Hermitian");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > 1e-10)
    throw std::invalid_argument("make_fock_state: trace " + std::to_string(tr) + " != 1");
  // PSD within 1e-10, via a Jacobi sweep on the (small) truncated matrix.
  {
    HermitianOperator h(hermitize(m));
    // HermitianOperator caps dim at 64 > kMaxFockCutoff + 1, so this is safe.
    const Spectrum s = eig_hermitian(h);
    if (s.eigenvalues.front() < -1e-10)
      throw std::invalid_argument("make_fock_state: matrix is not positive semidefinite "
                                  "(lambda_min = " + std::to_string(s.eigenvalues.front()) + ")");
  }
  FockState out;
  out.cutoff = dim - 1;
  out.matrix = std::move(m);
  return out;
}

PhaseGrid make_phase_grid(double q_min, double q_max, double p_min, double p_max,
                          int n_q, int n_p) {
  if (!(q_max > q_min) || !(p_max > p_min))
    throw std::invalid_argument("make_phase_grid: empty axis range");
  if (n_q < 8 || n_p < 8)
    throw std::invalid_argument("make_phase_grid: need at least 8 nodes per axis");
  return PhaseGrid{q_min, q_max, p_min, p_max, n_q, n_p};
}

Complex fock_wigner_kernel(int m, int n, double q, double p) {
  if (m < 0 || n < 0 || m > kMaxFockCutoff || n > kMaxFockCutoff)
    throw std::invalid_argument("fock_wigner_kernel: index out of range");
  if (m < n) return std::conj(fock_wigner_kernel(n, m, q, p));

  const double r2 = q * q + p * p;
  const double x = 2.0 * r2;
  const int k = m - n;

  // exp(-x/2) folded into the Laguerre recurrence keeps every intermediate
  // on the scale of the final value.
  double l_prev = std::exp(-0.5 * x);              // L_0^{(k)} e^{-x/2}
  double l_cur = (1.0 + k - x) * l_prev;           // L_1^{(k)} e^{-x/2}
  if (n == 0) l_cur = l_prev;
  for (int i = 2; i <= n; ++i) {
    const double l_next = ((2.0 * i - 1.0 + k - x) * l_cur - (i - 1.0 + k) * l_prev) / i;
    l_prev = l_cur;
    l_cur = l_next;
  }
  const double laguerre_scaled = (n == 0) ? l_prev : l_cur;

  Complex pref = ((n % 2 == 0) ? 1.0 : -1.0) / M_PI;
  const Complex z(std::sqrt(2.0) * q, -std::sqrt(2.0) * p);
  for (int i = n + 1; i <= m; ++i) pref *= z / std::sqrt(static_cast<double>(i));

  return pref * laguerre_scaled;
}

WignerGrid wigner_transform_matrix(const Matrix& rho, const PhaseGrid& grid) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("wigner_transform: matrix not square");
  const int dim = rho.rows();
  if (dim - 1 > kMaxFockCutoff)
    throw std::invalid_argument("wigner_transform: cutoff exceeds maximum " +
                                std::to_string(kMaxFockCutoff));

  WignerGrid out;
  out.grid = grid;
  out.values.assign(static_cast<std::size_t>(grid.n_q) * grid.n_p, 0.0);
  double max_imag = 0.0;

  for (int i = 0; i < grid.n_q; ++i) {
    const double q = grid.q(i);
    for (int kk = 0; kk < grid.n_p; ++kk) {
      const double p = grid.p(kk);
      Complex acc = 0.0;
      for (int mm = 0; mm < dim; ++mm)
        for (int nn = 0; nn < dim; ++nn) {
          const Complex c = rho(mm, nn);
          if (c == Complex(0.0)) continue;
          acc += c * fock_wigner_kernel(mm, nn, q, p);
        }
      max_imag = std::max(max_imag, std::abs(acc.imag()));
      out.values[static_cast<std::size_t>(i) * grid.n_p + kk] = acc.real();
    }
  }
  if (max_imag > 1e-8)
    throw std::runtime_error("wigner_transform: imaginary residue " + std::to_string(max_imag) +
                             " exceeds 1e-8; input is not Hermitian");
  return out;
}

WignerGrid wigner_transform(const FockState& rho, const PhaseGrid& grid) {
  return wigner_transform_matrix(rho.matrix, grid);
}

namespace {

double trapezoid_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

}  // namespace

Marginals marginals(const WignerGrid& w) {
  const PhaseGrid& g = w.grid;
  Marginals out;
  out.q_density.assign(g.n_q, 0.0);
  out.p_density.assign(g.n_p, 0.0);
  for (int i = 0; i < g.n_q; ++i) {
    double s = 0.0;
    for (int k = 0; k < g.n_p; ++k) s += trapezoid_weight(k, g.n_p) * w.at(i, k);
    out.q_density[i] = s * g.dp();
  }
  for (int k = 0; k < g.n_p; ++k) {
    double s = 0.0;
    for (int i = 0; i < g.n_q; ++i) s += trapezoid_weight(i, g.n_q) * w.at(i, k);
    out.p_density[k] = s * g.dq();
  }
  return out;
}

Matrix reconstruct_from_wigner(const WignerGrid& w, int cutoff) {
  if (cutoff < 0 || cutoff > kMaxFockCutoff)
    throw std::invalid_argument("reconstruct_from_wigner: invalid cutoff");
  const PhaseGrid& g = w.grid;
  const int dim = cutoff + 1;
  Matrix rho(dim, dim);
  const double cell = g.dq() * g.dp();
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n <= m; ++n) {
      Complex acc = 0.0;
      for (int i = 0; i < g.n_q; ++i) {
        const double wq = trapezoid_weight(i, g.n_q);
        const double q = g.q(i);
        for (int k = 0; k < g.n_p; ++k) {
          const double val = w.at(i, k);
          if (val == 0.0) continue;
          acc += wq * trapezoid_weight(k, g.n_p) * val * fock_wigner_kernel(n, m, q, g.p(k));
        }
      }
      acc *= 2.0 * M_PI * cell;
      rho(m, n) = acc;
      rho(n, m) = std::conj(acc);
    }
  }
  return rho;
}

}  // namespace qpr
