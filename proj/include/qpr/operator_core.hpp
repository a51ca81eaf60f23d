#pragma once

#include <cstdint>
#include <vector>

#include "qpr/matrix.hpp"

namespace qpr {

inline constexpr int kMaxDim = 64;           // desk scale; larger dims rejected
inline constexpr double kHermTol = 1e-12;    // max-entry Hermiticity tolerance

// A d x d complex Hermitian matrix: states, effects, observables, frame and
// dual elements all live here. Construction validates Hermiticity (within
// kHermTol, max absolute entry deviation) and 1 <= d <= kMaxDim.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  int dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Complex& operator()(int i, int j) const { return m_(i, j); }

  double trace() const;  // real part; imaginary part vanishes by Hermiticity

 private:
  Matrix m_;
};

HermitianOperator operator+(const HermitianOperator& x, const HermitianOperator& y);
HermitianOperator operator-(const HermitianOperator& x, const HermitianOperator& y);
HermitianOperator operator*(double s, const HermitianOperator& x);

HermitianOperator identity_operator(int d);

// Eigendecomposition result: ascending eigenvalues, eigenvector matrix with
// column k paired with eigenvalue k.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

// Coordinates of a Hermitian operator in the fixed orthonormal Hermitian
// basis (Tr(B_a B_b) = delta_ab). Basis order, frozen across the project:
//   index 0                      : I/sqrt(d)
//   1 .. M        (M = d(d-1)/2) : symmetric pairs (E_jk+E_kj)/sqrt(2),
//                                  pairs (j,k), j<k, in row-major order
//   M+1 .. 2M                    : antisymmetric pairs (-iE_jk+iE_kj)/sqrt(2)
//   2M+1 .. d^2-1                : diagonal elements diag(1,..,1,-l,0,..)/sqrt(l(l+1))
struct RealCoordinates {
  int dim = 0;
  std::vector<double> coords;  // length dim^2
};

double trace_inner(const HermitianOperator& a, const HermitianOperator& b);

// Cyclic Jacobi for complex Hermitian matrices. Converges when the
// off-diagonal Frobenius mass drops below 1e-14 * ||A||_F. Eigenvalues
// ascending; degenerate columns ordered by lexicographic comparison of
// entries rounded to 1e-9, each column phase-fixed so its largest-modulus
// entry is real positive.
Spectrum eig_hermitian(const HermitianOperator& a);

RealCoordinates vectorize(const HermitianOperator& a);
HermitianOperator devectorize(const RealCoordinates& c);

// The a-th basis element of the fixed Hermitian basis for dimension d.
HermitianOperator hermitian_basis_element(int d, int a);

struct PsdReport {
  bool verdict = false;
  double lambda_min = 0.0;
  std::vector<Complex> witness;  // unit eigenvector attaining lambda_min
};

// verdict is true iff lambda_min >= -tol.
PsdReport psd_check(const HermitianOperator& a, double tol);

// rho = G G† / Tr(G G†), G with independent standard complex Gaussian
// entries drawn row-major from Rng(seed). Same seed, same matrix, bitwise.
HermitianOperator random_state(int d, std::uint64_t seed);

// E = U diag(u_1..u_d) U†, u_i uniform on [0,1], U from Gram-Schmidt applied
// to a Gaussian matrix (columns drawn after the matrix entries).
HermitianOperator random_effect(int d, std::uint64_t seed);

// Random Hermitian with standard Gaussian coordinates in the fixed basis.
HermitianOperator random_hermitian(int d, std::uint64_t seed);

// Rank-1 projector onto v/|v|.
HermitianOperator projector(const std::vector<Complex>& v);

}  // namespace qpr
