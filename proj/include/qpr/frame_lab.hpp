#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpr/operator_core.hpp"

namespace qpr {

// Finite indexed family {F_j : j in Omega} of Hermitian operators summing to
// the identity (within 1e-10 max-entry). Informational completeness is a
// property, not an invariant: frames with n < d^2 are constructible and are
// simply never complete.
struct Frame {
  int dim = 0;
  std::vector<HermitianOperator> elements;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(elements.size()); }
};

// Validates the sum-to-identity and label invariants; throws on violation.
Frame make_frame(int dim, std::vector<HermitianOperator> elements, std::vector<std::string> labels);

struct FrameBounds {
  double a = 0.0;
  double b = 0.0;
};

struct FrameReport {
  FrameBounds bounds;
  bool informationally_complete = false;
  bool is_povm = false;
  bool is_tight = false;
  int gram_rank = 0;
};

// The n x d^2 synthesis matrix G, rows vectorize(F_j), in row-major order.
std::vector<std::vector<double>> synthesis_matrix(const Frame& f);

// Singular values of G, descending, from a one-sided Jacobi sweep over the
// columns. Small singular values come out with full relative accuracy, which
// the eigenvalues of G^T G cannot deliver; rank decisions use this.
std::vector<double> synthesis_singular_values(const Frame& f);

// Number of singular values above tol * largest.
int synthesis_rank(const Frame& f, double tol = 1e-10);

// a = lambda_min(G^T G), b = lambda_max(G^T G). a > 0 iff informationally
// complete; a ~ 0 is reported, never thrown.
FrameBounds frame_bounds(const Frame& f);

// true iff rank(G) = d^2, counting singular values > tol * largest.
bool is_informationally_complete(const Frame& f, double tol = 1e-10);

// true iff every element passes psd_check(tol).
bool is_povm(const Frame& f, double tol);

// true iff (b - a)/b <= tol.
bool is_tight(const Frame& f, double tol = 1e-9);

FrameReport frame_report(const Frame& f, double tol = 1e-10);

// Phase-point operators A_{(q,p)} on Z_d x Z_d, scaled by 1/d. Prime d only,
// d <= 31. Elements satisfy Tr(A_j A_k) = d delta_jk and sum to the identity.
// d = 2 uses the Pauli combination A_{(q,p)} =
// (I + (-1)^q sz + (-1)^p sx + (-1)^{q+p} sy)/2; odd primes use
// <k|A_{(q,p)}|j> = [j+k = 2q mod d] * omega^{p(k-j)}.
Frame wootters_frame(int d);

// Four projectors onto Bloch vectors (1,1,1), (1,-1,-1), (-1,1,-1),
// (-1,-1,1), each /sqrt(3), scaled by 1/2.
Frame sic_frame_qubit();

// The d(d+1) rank-1 projectors of the standard d+1 mutually unbiased bases,
// each scaled by 1/(d+1). Prime d <= 31; d = 2 uses the z, x, y eigenbases,
// odd primes the quadratic Gauss-sum bases <j|b,v> = omega^{b j^2 + v j}/sqrt(d).
Frame mub_frame(int d);

// n Wishart-distributed PSD operators conjugated by the inverse square root
// of their sum; retries on fresh substreams until informationally complete.
Frame random_ic_povm(int d, int n, std::uint64_t seed);

// n Gaussian Hermitian operators shifted so they sum to the identity; not
// positive in general. Retries until informationally complete.
Frame random_frame(int d, int n, std::uint64_t seed);

}  // namespace qpr
