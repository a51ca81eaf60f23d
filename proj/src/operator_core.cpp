#include "qpr/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qpr/rng.hpp"

namespace qpr {

HermitianOperator::HermitianOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("HermitianOperator: matrix not square");
  const int d = m_.rows();
  if (d < 1) throw std::invalid_argument("HermitianOperator: dim must be >= 1");
  if (d > kMaxDim)
    throw std::invalid_argument("HermitianOperator: dim " + std::to_string(d) +
                                " exceeds supported maximum " + std::to_string(kMaxDim));
  const double defect = hermiticity_defect(m_);
  if (defect > kHermTol)
    throw std::invalid_argument("HermitianOperator: matrix is not Hermitian (max deviation " +
                                std::to_string(defect) + ")");
}

double HermitianOperator::trace() const { return m_.trace().real(); }

HermitianOperator operator+(const HermitianOperator& x, const HermitianOperator& y) {
  return HermitianOperator(x.matrix() + y.matrix());
}

HermitianOperator operator-(const HermitianOperator& x, const HermitianOperator& y) {
  return HermitianOperator(x.matrix() - y.matrix());
}

HermitianOperator operator*(double s, const HermitianOperator& x) {
  return HermitianOperator(s * x.matrix());
}

HermitianOperator identity_operator(int d) { return HermitianOperator(Matrix::identity(d)); }

double trace_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("trace_inner: dimension mismatch (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  const int d = a.dim();
  Complex t = 0.0;
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) t += a(i, k) * b(k, i);
  return t.real();
}

// ---------------------------------------------------------------------------
// Cyclic Jacobi for complex Hermitian matrices.

namespace {

double offdiag_frobenius(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

// Rounded lexicographic comparison used to order degenerate eigenvector
// columns deterministically.
bool column_less(const Matrix& v, int a, int b) {
  for (int r = 0; r < v.rows(); ++r) {
    const double rea = std::round(v(r, a).real() * 1e9);
    const double reb = std::round(v(r, b).real() * 1e9);
    if (rea != reb) return rea < reb;
    const double ima = std::round(v(r, a).imag() * 1e9);
    const double imb = std::round(v(r, b).imag() * 1e9);
    if (ima != imb) return ima < imb;
  }
  return false;
}

void canonicalize_column_phase(Matrix& v, int col) {
  int best = 0;
  double best_abs = -1.0;
  for (int r = 0; r < v.rows(); ++r) {
    const double m = std::abs(v(r, col));
    if (m > best_abs + 1e-15) {
      best_abs = m;
      best = r;
    }
  }
  if (best_abs <= 0.0) return;
  const Complex phase = v(best, col) / best_abs;
  for (int r = 0; r < v.rows(); ++r) v(r, col) *= std::conj(phase);
}

}  // namespace

Spectrum eig_hermitian(const HermitianOperator& a) {
  const int d = a.dim();
  Matrix m = a.matrix();
  Matrix v = Matrix::identity(d);

  if (d > 1) {
    const double norm = std::max(m.frobenius(), 1e-300);
    const int max_sweeps = 100;
    int sweep = 0;
    while (offdiag_frobenius(m) >= 1e-14 * norm) {
      if (++sweep > max_sweeps)
        throw std::runtime_error("eig_hermitian: Jacobi failed to converge");
      for (int p = 0; p < d - 1; ++p) {
        for (int q = p + 1; q < d; ++q) {
          const Complex apq = m(p, q);
          const double b = std::abs(apq);
          const double app = m(p, p).real();
          const double aqq = m(q, q).real();
          if (b <= 1e-18 * (std::abs(app) + std::abs(aqq) + 1e-300)) {
            m(p, q) = 0.0;
            m(q, p) = 0.0;
            continue;
          }
          // Phase rotation makes the pivot real, then a classic real Jacobi
          // rotation annihilates it.
          const Complex phase = apq / b;  // e^{i phi}
          const double tau = (aqq - app) / (2.0 * b);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const Complex w = s * std::conj(phase);          // s e^{-i phi}
          const Complex cphi = c * std::conj(phase);       // c e^{-i phi}

          // M <- U† M U with U_pp = c, U_pq = s, U_qp = -s e^{-i phi},
          // U_qq = c e^{-i phi}.
          for (int r = 0; r < d; ++r) {
            const Complex mp = m(r, p), mq = m(r, q);
            m(r, p) = c * mp - w * mq;
            m(r, q) = s * mp + cphi * mq;
          }
          for (int r = 0; r < d; ++r) {
            const Complex mp = m(p, r), mq = m(q, r);
            m(p, r) = c * mp - std::conj(w) * mq;
            m(q, r) = s * mp + std::conj(cphi) * mq;
          }
          m(p, q) = 0.0;
          m(q, p) = 0.0;
          m(p, p) = m(p, p).real();
          m(q, q) = m(q, q).real();

          for (int r = 0; r < d; ++r) {
            const Complex vp = v(r, p), vq = v(r, q);
            v(r, p) = c * vp - w * vq;
            v(r, q) = s * vp + cphi * vq;
          }
        }
      }
    }
  }

  for (int col = 0; col < d; ++col) canonicalize_column_phase(v, col);

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const double lx = m(x, x).real(), ly = m(y, y).real();
    if (lx != ly) return lx < ly;
    return column_less(v, x, y);
  });

  Spectrum out;
  out.eigenvalues.resize(d);
  out.eigenvectors = Matrix(d, d);
  for (int k = 0; k < d; ++k) {
    out.eigenvalues[k] = m(order[k], order[k]).real();
    for (int r = 0; r < d; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixed orthonormal Hermitian basis and (de)vectorization.

namespace {

constexpr double kSqrt2Inv = 0.70710678118654752440;

int pair_index(int j, int k, int d) {  // j < k, row-major over pairs
  return j * d - j * (j + 1) / 2 + (k - j - 1);
}

}  // namespace

RealCoordinates vectorize(const HermitianOperator& a) {
  const int d = a.dim();
  const int m = d * (d - 1) / 2;
  RealCoordinates c;
  c.dim = d;
  c.coords.assign(static_cast<std::size_t>(d) * d, 0.0);

  double tr = 0.0;
  for (int i = 0; i < d; ++i) tr += a(i, i).real();
  c.coords[0] = tr / std::sqrt(static_cast<double>(d));

  for (int j = 0; j < d - 1; ++j) {
    for (int k = j + 1; k < d; ++k) {
      const int p = pair_index(j, k, d);
      c.coords[1 + p] = std::sqrt(2.0) * a(j, k).real();
      c.coords[1 + m + p] = -std::sqrt(2.0) * a(j, k).imag();
    }
  }
  for (int l = 1; l < d; ++l) {
    double s = 0.0;
    for (int i = 0; i < l; ++i) s += a(i, i).real();
    s -= l * a(l, l).real();
    c.coords[1 + 2 * m + (l - 1)] = s / std::sqrt(static_cast<double>(l) * (l + 1));
  }
  return c;
}

HermitianOperator devectorize(const RealCoordinates& c) {
  const int d = c.dim;
  if (d < 1) throw std::invalid_argument("devectorize: dim must be >= 1");
  if (c.coords.size() != static_cast<std::size_t>(d) * d)
    throw std::invalid_argument("devectorize: coordinate length " +
                                std::to_string(c.coords.size()) + " != d^2 = " +
                                std::to_string(d * d));
  const int m = d * (d - 1) / 2;
  Matrix out(d, d);

  std::vector<double> diag(d, c.coords[0] / std::sqrt(static_cast<double>(d)));
  for (int l = 1; l < d; ++l) {
    const double w = c.coords[1 + 2 * m + (l - 1)] / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int i = 0; i < l; ++i) diag[i] += w;
    diag[l] -= l * w;
  }
  for (int i = 0; i < d; ++i) out(i, i) = diag[i];

  for (int j = 0; j < d - 1; ++j) {
    for (int k = j + 1; k < d; ++k) {
      const int p = pair_index(j, k, d);
      const Complex z(kSqrt2Inv * c.coords[1 + p], -kSqrt2Inv * c.coords[1 + m + p]);
      out(j, k) = z;
      out(k, j) = std::conj(z);
    }
  }
  return HermitianOperator(std::move(out));
}

HermitianOperator hermitian_basis_element(int d, int a) {
  if (a < 0 || a >= d * d) throw std::invalid_argument("hermitian_basis_element: index out of range");
  RealCoordinates c;
  c.dim = d;
  c.coords.assign(static_cast<std::size_t>(d) * d, 0.0);
  c.coords[a] = 1.0;
  return devectorize(c);
}

// ---------------------------------------------------------------------------

PsdReport psd_check(const HermitianOperator& a, double tol) {
  if (tol < 0.0) throw std::invalid_argument("psd_check: tol must be >= 0");
  const Spectrum s = eig_hermitian(a);
  PsdReport r;
  r.lambda_min = s.eigenvalues.front();
  r.verdict = r.lambda_min >= -tol;
  r.witness.resize(a.dim());
  for (int i = 0; i < a.dim(); ++i) r.witness[i] = s.eigenvectors(i, 0);
  return r;
}

namespace {

void check_random_dim(int d, const char* who) {
  if (d < 1) throw std::invalid_argument(std::string(who) + ": d must be >= 1");
  if (d > kMaxDim)
    throw std::invalid_argument(std::string(who) + ": d exceeds supported maximum " +
                                std::to_string(kMaxDim));
}

Matrix gaussian_matrix(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  return g;
}

// Modified Gram-Schmidt; R_kk > 0 so the result is deterministic.
Matrix gram_schmidt_unitary(Matrix g) {
  const int d = g.rows();
  for (int k = 0; k < d; ++k) {
    for (int prev = 0; prev < k; ++prev) {
      Complex proj = 0.0;
      for (int r = 0; r < d; ++r) proj += std::conj(g(r, prev)) * g(r, k);
      for (int r = 0; r < d; ++r) g(r, k) -= proj * g(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < d; ++r) norm += std::norm(g(r, k));
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw std::runtime_error("gram_schmidt_unitary: rank-deficient draw");
    for (int r = 0; r < d; ++r) g(r, k) /= norm;
  }
  return g;
}

}  // namespace

HermitianOperator random_state(int d, std::uint64_t seed) {
  check_random_dim(d, "random_state");
  Rng rng(seed);
  const Matrix g = gaussian_matrix(d, rng);
  Matrix w = g * g.adjoint();
  const double tr = w.trace().real();
  w = (1.0 / tr) * w;
  return HermitianOperator(hermitize(w));
}

HermitianOperator random_effect(int d, std::uint64_t seed) {
  check_random_dim(d, "random_effect");
  Rng rng(seed);
  const Matrix u = gram_schmidt_unitary(gaussian_matrix(d, rng));
  Matrix lam(d, d);
  for (int i = 0; i < d; ++i) lam(i, i) = rng.uniform01();
  return HermitianOperator(hermitize(u * lam * u.adjoint()));
}

HermitianOperator random_hermitian(int d, std::uint64_t seed) {
  check_random_dim(d, "random_hermitian");
  Rng rng(seed);
  RealCoordinates c;
  c.dim = d;
  c.coords.resize(static_cast<std::size_t>(d) * d);
  for (double& x : c.coords) x = rng.normal();
  return devectorize(c);
}

HermitianOperator projector(const std::vector<Complex>& v) {
  const int d = static_cast<int>(v.size());
  if (d < 1) throw std::invalid_argument("projector: empty vector");
  double norm = 0.0;
  for (const Complex& z : v) norm += std::norm(z);
  if (norm <= 0.0) throw std::invalid_argument("projector: zero vector");
  Matrix p(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(i, j) = v[i] * std::conj(v[j]) / norm;
  return HermitianOperator(hermitize(p));
}

}  // namespace qpr
