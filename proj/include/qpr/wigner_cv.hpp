#pragma once

#include <vector>

#include "qpr/matrix.hpp"

namespace qpr {

inline constexpr int kMaxFockCutoff = 40;  // keeps Laguerre recurrences in safe range

// Density operator truncated to the number basis {|0>, ..., |N>}:
// (N+1) x (N+1) Hermitian, PSD and unit trace within 1e-10.
struct FockState {
  int cutoff = 0;
  Matrix matrix;
};

FockState make_fock_state(Matrix m);

// Uniform rectangular phase-space grid, endpoints inclusive. Units: hbar = 1,
// dimensionless quadratures; the Wigner surface is normalized so that
// integral W dq dp = 1.
struct PhaseGrid {
  double q_min = -6.0, q_max = 6.0;
  double p_min = -6.0, p_max = 6.0;
  int n_q = 201, n_p = 201;

  double dq() const { return (q_max - q_min) / (n_q - 1); }
  double dp() const { return (p_max - p_min) / (n_p - 1); }
  double q(int i) const { return q_min + i * dq(); }
  double p(int k) const { return p_min + k * dp(); }
};

PhaseGrid make_phase_grid(double q_min, double q_max, double p_min, double p_max,
                          int n_q, int n_p);

struct WignerGrid {
  PhaseGrid grid;
  std::vector<double> values;  // row-major: values[i * n_p + k] = W(q_i, p_k)

  double at(int i, int k) const { return values[static_cast<std::size_t>(i) * grid.n_p + k]; }
};

// Cross-Wigner function of |m><n| in closed Laguerre form, for m >= n:
//   W_mn(q,p) = ((-1)^n / pi) * prod_{i=n+1}^{m} (sqrt(2)(q - ip)/sqrt(i))
//               * L_n^{(m-n)}(2(q^2+p^2)) * exp(-(q^2+p^2))
// with W_mn = conj(W_nm); W_nn is real. The exponential is folded into the
// Laguerre recurrence to keep intermediates bounded.
Complex fock_wigner_kernel(int m, int n, double q, double p);

// W(q,p) = sum_{mn} rho_mn W_mn(q,p). Values are real within 1e-12 for valid
// states; a residual imaginary part above 1e-8 raises an error.
WignerGrid wigner_transform(const FockState& rho, const PhaseGrid& grid);

// Same, on a raw matrix in the number basis (no state validation). This is
// the path that can trip the imaginary-residue error.
WignerGrid wigner_transform_matrix(const Matrix& rho, const PhaseGrid& grid);

struct Marginals {
  std::vector<double> q_density;  // trapezoidal integral over p, per q node
  std::vector<double> p_density;  // trapezoidal integral over q, per p node
};

Marginals marginals(const WignerGrid& w);

// rho~_mn = 2*pi * integral W(q,p) W_nm(q,p) dq dp (trapezoidal). The grid
// must cover the state's support; heuristic |q|,|p| <= sqrt(2*cutoff) + 4.
// Accuracy is reported by the caller, never enforced here.
Matrix reconstruct_from_wigner(const WignerGrid& w, int cutoff);

}  // namespace qpr
