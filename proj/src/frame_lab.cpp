#include "qpr/frame_lab.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpr/rng.hpp"

namespace qpr {

namespace {

constexpr double kSumToIdentityTol = 1e-10;

bool is_prime(int d) {
  if (d < 2) return false;
  for (int k = 2; k * k <= d; ++k)
    if (d % k == 0) return false;
  return true;
}

void check_prime_dim(int d, const char* who) {
  if (!is_prime(d)) throw std::invalid_argument(std::string(who) + ": d must be prime");
  if (d > 31) throw std::invalid_argument(std::string(who) + ": d must be <= 31");
}

Matrix sum_of_elements(const std::vector<HermitianOperator>& elems) {
  Matrix s(elems.front().dim(), elems.front().dim());
  for (const auto& e : elems) s = s + e.matrix();
  return s;
}

}  // namespace

Frame make_frame(int dim, std::vector<HermitianOperator> elements, std::vector<std::string> labels) {
  if (elements.empty()) throw std::invalid_argument("make_frame: frame needs at least one element");
  for (const auto& e : elements)
    if (e.dim() != dim) throw std::invalid_argument("make_frame: element dimension mismatch");
  if (labels.size() != elements.size())
    throw std::invalid_argument("make_frame: label count " + std::to_string(labels.size()) +
                                " != element count " + std::to_string(elements.size()));
  const double defect = max_abs_diff(sum_of_elements(elements), Matrix::identity(dim));
  if (defect > kSumToIdentityTol)
    throw std::invalid_argument("make_frame: elements do not sum to the identity (max deviation " +
                                std::to_string(defect) + ")");
  Frame f;
  f.dim = dim;
  f.elements = std::move(elements);
  f.labels = std::move(labels);
  return f;
}

std::vector<std::vector<double>> synthesis_matrix(const Frame& f) {
  std::vector<std::vector<double>> g;
  g.reserve(f.elements.size());
  for (const auto& e : f.elements) g.push_back(vectorize(e).coords);
  return g;
}

namespace {

// G^T G as a real symmetric d^2 x d^2 matrix, fed to the Hermitian solver.
HermitianOperator gram_dsq(const std::vector<std::vector<double>>& g, int dsq) {
  Matrix m(dsq, dsq);
  for (const auto& row : g)
    for (int a = 0; a < dsq; ++a) {
      if (row[a] == 0.0) continue;
      for (int b = 0; b < dsq; ++b) m(a, b) += row[a] * row[b];
    }
  return HermitianOperator(hermitize(m));
}

}  // namespace

FrameBounds frame_bounds(const Frame& f) {
  const int dsq = f.dim * f.dim;
  const Spectrum s = eig_hermitian(gram_dsq(synthesis_matrix(f), dsq));
  FrameBounds b;
  b.a = s.eigenvalues.front();
  b.b = s.eigenvalues.back();
  return b;
}

bool is_informationally_complete(const Frame& f, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("is_informationally_complete: tol must be > 0");
  const int dsq = f.dim * f.dim;
  if (f.size() < dsq) return false;
  const Spectrum s = eig_hermitian(gram_dsq(synthesis_matrix(f), dsq));
  const double smax = std::sqrt(std::max(s.eigenvalues.back(), 0.0));
  int rank = 0;
  for (double lam : s.eigenvalues)
    if (std::sqrt(std::max(lam, 0.0)) > tol * smax) ++rank;
  return rank == dsq;
}

bool is_povm(const Frame& f, double tol) {
  for (const auto& e : f.elements)
    if (!psd_check(e, tol).verdict) return false;
  return true;
}

bool is_tight(const Frame& f, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("is_tight: tol must be > 0");
  const FrameBounds b = frame_bounds(f);
  return b.b > 0.0 && (b.b - b.a) / b.b <= tol;
}

FrameReport frame_report(const Frame& f, double tol) {
  FrameReport r;
  const int dsq = f.dim * f.dim;
  const Spectrum s = eig_hermitian(gram_dsq(synthesis_matrix(f), dsq));
  r.bounds.a = s.eigenvalues.front();
  r.bounds.b = s.eigenvalues.back();
  const double smax = std::sqrt(std::max(s.eigenvalues.back(), 0.0));
  for (double lam : s.eigenvalues)
    if (std::sqrt(std::max(lam, 0.0)) > 1e-10 * smax) ++r.gram_rank;
  r.informationally_complete = (f.size() >= dsq) && r.gram_rank == dsq;
  r.is_povm = is_povm(f, tol);
  r.is_tight = r.bounds.b > 0.0 && (r.bounds.b - r.bounds.a) / r.bounds.b <= 1e-9;
  return r;
}

// ---------------------------------------------------------------------------
// Named constructions.

Frame wootters_frame(int d) {
  check_prime_dim(d, "wootters_frame");
  std::vector<HermitianOperator> elems;
  std::vector<std::string> labels;
  elems.reserve(static_cast<std::size_t>(d) * d);

  for (int q = 0; q < d; ++q) {
    for (int p = 0; p < d; ++p) {
      Matrix a(d, d);
      if (d == 2) {
        const double sq = (q == 0) ? 1.0 : -1.0;
        const double sp = (p == 0) ? 1.0 : -1.0;
        a(0, 0) = 0.5 * (1.0 + sq);
        a(1, 1) = 0.5 * (1.0 - sq);
        a(0, 1) = 0.5 * Complex(sp, -sq * sp);
        a(1, 0) = std::conj(a(0, 1));
      } else {
        for (int j = 0; j < d; ++j) {
          const int k = ((2 * q - j) % d + d) % d;
          const int diff = ((k - j) % d + d) % d;
          const double arg = 2.0 * M_PI * ((p * diff) % d) / d;
          a(k, j) = Complex(std::cos(arg), std::sin(arg));
        }
      }
      elems.push_back((1.0 / d) * HermitianOperator(hermitize(a)));
      labels.push_back("(" + std::to_string(q) + "," + std::to_string(p) + ")");
    }
  }
  return make_frame(d, std::move(elems), std::move(labels));
}

Frame sic_frame_qubit() {
  const double s = 1.0 / std::sqrt(3.0);
  const double bloch[4][3] = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  std::vector<HermitianOperator> elems;
  std::vector<std::string> labels;
  for (int j = 0; j < 4; ++j) {
    const double x = bloch[j][0], y = bloch[j][1], z = bloch[j][2];
    Matrix p(2, 2);
    p(0, 0) = 0.5 * (1.0 + z);
    p(1, 1) = 0.5 * (1.0 - z);
    p(0, 1) = 0.5 * Complex(x, -y);
    p(1, 0) = 0.5 * Complex(x, y);
    elems.push_back(0.5 * HermitianOperator(std::move(p)));
    labels.push_back("sic" + std::to_string(j));
  }
  return make_frame(2, std::move(elems), std::move(labels));
}

Frame mub_frame(int d) {
  check_prime_dim(d, "mub_frame");
  std::vector<HermitianOperator> elems;
  std::vector<std::string> labels;
  const double scale = 1.0 / (d + 1);

  auto push_projector = [&](const std::vector<Complex>& v, const std::string& label) {
    elems.push_back(scale * projector(v));
    labels.push_back(label);
  };

  if (d == 2) {
    const double r = 1.0 / std::sqrt(2.0);
    // z, x, y eigenbases in that order.
    push_projector({1.0, 0.0}, "b0:0");
    push_projector({0.0, 1.0}, "b0:1");
    push_projector({r, r}, "b1:0");
    push_projector({r, -r}, "b1:1");
    push_projector({r, Complex(0.0, r)}, "b2:0");
    push_projector({r, Complex(0.0, -r)}, "b2:1");
  } else {
    for (int k = 0; k < d; ++k) {
      std::vector<Complex> v(d, 0.0);
      v[k] = 1.0;
      push_projector(v, "b0:" + std::to_string(k));
    }
    const double r = 1.0 / std::sqrt(static_cast<double>(d));
    for (int basis = 0; basis < d; ++basis) {
      for (int vec = 0; vec < d; ++vec) {
        std::vector<Complex> v(d);
        for (int j = 0; j < d; ++j) {
          const int e = (basis * j * j + vec * j) % d;
          const double arg = 2.0 * M_PI * e / d;
          v[j] = r * Complex(std::cos(arg), std::sin(arg));
        }
        push_projector(v, "b" + std::to_string(basis + 1) + ":" + std::to_string(vec));
      }
    }
  }
  return make_frame(d, std::move(elems), std::move(labels));
}

// ---------------------------------------------------------------------------
// Random families.

namespace {

HermitianOperator inverse_sqrt(const HermitianOperator& s) {
  const Spectrum sp = eig_hermitian(s);
  const int d = s.dim();
  if (sp.eigenvalues.front() <= 1e-12 * std::max(sp.eigenvalues.back(), 1.0))
    throw std::runtime_error("inverse_sqrt: operator numerically singular");
  Matrix lam(d, d);
  for (int i = 0; i < d; ++i) lam(i, i) = 1.0 / std::sqrt(sp.eigenvalues[i]);
  return HermitianOperator(hermitize(sp.eigenvectors * lam * sp.eigenvectors.adjoint()));
}

constexpr int kMaxCompletenessRetries = 100;

}  // namespace

Frame random_ic_povm(int d, int n, std::uint64_t seed) {
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("random_ic_povm: invalid dimension");
  if (n < d * d)
    throw std::invalid_argument("random_ic_povm: n = " + std::to_string(n) +
                                " < d^2 = " + std::to_string(d * d));
  for (int attempt = 0; attempt < kMaxCompletenessRetries; ++attempt) {
    Rng rng(Rng::substream(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<HermitianOperator> wisharts;
    wisharts.reserve(n);
    Matrix sum(d, d);
    for (int j = 0; j < n; ++j) {
      Matrix g(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = rng.complex_normal();
      Matrix w = hermitize(g * g.adjoint());
      sum = sum + w;
      wisharts.emplace_back(std::move(w));
    }
    const HermitianOperator sinv = inverse_sqrt(HermitianOperator(hermitize(sum)));
    std::vector<HermitianOperator> elems;
    std::vector<std::string> labels;
    for (int j = 0; j < n; ++j) {
      elems.emplace_back(
          hermitize(sinv.matrix() * wisharts[j].matrix() * sinv.matrix()));
      labels.push_back("e" + std::to_string(j));
    }
    Frame f = make_frame(d, std::move(elems), std::move(labels));
    if (is_informationally_complete(f)) return f;
  }
  throw std::runtime_error("random_ic_povm: no informationally complete draw in " +
                           std::to_string(kMaxCompletenessRetries) + " attempts");
}

Frame random_frame(int d, int n, std::uint64_t seed) {
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("random_frame: invalid dimension");
  if (n < d * d)
    throw std::invalid_argument("random_frame: n = " + std::to_string(n) +
                                " < d^2 = " + std::to_string(d * d));
  for (int attempt = 0; attempt < kMaxCompletenessRetries; ++attempt) {
    const std::uint64_t stream = Rng::substream(seed, static_cast<std::uint64_t>(attempt));
    std::vector<HermitianOperator> raw;
    raw.reserve(n);
    Matrix sum(d, d);
    for (int j = 0; j < n; ++j) {
      raw.push_back(random_hermitian(d, Rng::substream(stream, static_cast<std::uint64_t>(j))));
      sum = sum + raw.back().matrix();
    }
    const Matrix shift = (1.0 / n) * (Matrix::identity(d) - sum);
    std::vector<HermitianOperator> elems;
    std::vector<std::string> labels;
    for (int j = 0; j < n; ++j) {
      elems.emplace_back(hermitize(raw[j].matrix() + shift));
      labels.push_back("r" + std::to_string(j));
    }
    Frame f = make_frame(d, std::move(elems), std::move(labels));
    if (is_informationally_complete(f)) return f;
  }
  throw std::runtime_error("random_frame: no informationally complete draw in " +
                           std::to_string(kMaxCompletenessRetries) + " attempts");
}

}  // namespace qpr
