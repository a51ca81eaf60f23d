#include "qpr/dual_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpr/rng.hpp"

namespace qpr {

namespace {

constexpr double kRankTol = 1e-10;  // relative to largest singular value

struct SynthesisAnalysis {
  std::vector<std::vector<double>> g;  // n x d^2
  Spectrum gram;                       // of G^T G (d^2 x d^2)
  int rank = 0;
};

SynthesisAnalysis analyze_synthesis(const Frame& f) {
  SynthesisAnalysis out;
  out.g = synthesis_matrix(f);
  const int dsq = f.dim * f.dim;
  Matrix gram(dsq, dsq);
  for (const auto& row : out.g)
    for (int a = 0; a < dsq; ++a) {
      if (row[a] == 0.0) continue;
      for (int b = 0; b < dsq; ++b) gram(a, b) += row[a] * row[b];
    }
  out.gram = eig_hermitian(HermitianOperator(hermitize(gram)));
  const double smax = std::sqrt(std::max(out.gram.eigenvalues.back(), 0.0));
  for (double lam : out.gram.eigenvalues)
    if (std::sqrt(std::max(lam, 0.0)) > kRankTol * smax) ++out.rank;
  return out;
}

void require_complete(const SynthesisAnalysis& s, int dsq, const char* who) {
  if (s.rank < dsq)
    throw std::invalid_argument(std::string(who) + ": frame not informationally complete "
                                "(synthesis rank " + std::to_string(s.rank) + " < d^2 = " +
                                std::to_string(dsq) + ")");
}

}  // namespace

DualFrame canonical_dual(const Frame& f) {
  const int d = f.dim;
  const int dsq = d * d;
  const int n = f.size();
  const SynthesisAnalysis syn = analyze_synthesis(f);
  require_complete(syn, dsq, "canonical_dual");

  // (G^T G)^{-1} through the eigendecomposition.
  Matrix inv(dsq, dsq);
  {
    Matrix lam(dsq, dsq);
    for (int i = 0; i < dsq; ++i) lam(i, i) = 1.0 / syn.gram.eigenvalues[i];
    inv = syn.gram.eigenvectors * lam * syn.gram.eigenvectors.adjoint();
  }

  // Delta = (G^T G)^{-1} G^T, column j = coordinates of D_j. The identity row
  // is pinned to 1/sqrt(d): forced by unit element traces and already implied
  // by sum_j F_j = I, so this only removes roundoff (and, for frames with
  // unequal element traces, the kernel component that would skew the traces).
  const double id_row = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<HermitianOperator> elems;
  elems.reserve(n);
  for (int j = 0; j < n; ++j) {
    RealCoordinates c;
    c.dim = d;
    c.coords.assign(dsq, 0.0);
    for (int a = 0; a < dsq; ++a) {
      Complex acc = 0.0;
      for (int b = 0; b < dsq; ++b) acc += inv(a, b) * syn.g[j][b];
      c.coords[a] = acc.real();
    }
    c.coords[0] = id_row;
    elems.push_back(devectorize(c));
  }

  DualFrame out;
  out.dim = d;
  out.elements = std::move(elems);
  out.labels = f.labels;
  return out;
}

namespace {

double residual_for(const Frame& f, const DualFrame& d, const HermitianOperator& a) {
  Matrix acc(f.dim, f.dim);
  for (int j = 0; j < f.size(); ++j)
    acc = acc + trace_inner(f.elements[j], a) * d.elements[j].matrix();
  return max_abs_diff(a.matrix(), acc);
}

}  // namespace

ReconstructionCheck verify_reconstruction(const Frame& f, const DualFrame& d,
                                          int trials, std::uint64_t seed) {
  if (f.dim != d.dim || f.size() != d.size())
    throw std::invalid_argument("verify_reconstruction: frame and dual are misaligned (" +
                                std::to_string(f.size()) + " vs " + std::to_string(d.size()) +
                                " elements)");
  if (trials < 1) throw std::invalid_argument("verify_reconstruction: trials must be >= 1");
  ReconstructionCheck out;
  for (int t = 0; t < trials; ++t) {
    const HermitianOperator a =
        random_hermitian(f.dim, Rng::substream(seed, static_cast<std::uint64_t>(t)));
    out.max_residual = std::max(out.max_residual, residual_for(f, d, a));
  }
  return out;
}

double reconstruction_residual_probe(const Frame& f, const DualFrame& d) {
  if (f.dim != d.dim || f.size() != d.size())
    throw std::invalid_argument("reconstruction_residual_probe: frame and dual are misaligned");
  double r = 0.0;
  for (int a = 0; a < f.dim * f.dim; ++a)
    r = std::max(r, residual_for(f, d, hermitian_basis_element(f.dim, a)));
  return r;
}

DualSpace dual_space(const Frame& f) {
  const int d = f.dim;
  const int dsq = d * d;
  const int n = f.size();

  DualSpace out;
  out.canonical = canonical_dual(f);

  // Null space of G^T from the spectrum of G G^T: eigencolumns whose singular
  // value falls below the rank threshold.
  Matrix ggt(n, n);
  {
    const auto g = synthesis_matrix(f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int b = 0; b < dsq; ++b) s += g[i][b] * g[j][b];
        ggt(i, j) = s;
      }
  }
  const Spectrum sp = eig_hermitian(HermitianOperator(hermitize(ggt)));
  const double smax = std::sqrt(std::max(sp.eigenvalues.back(), 0.0));
  std::vector<std::vector<double>> null_vectors;
  for (int k = 0; k < n; ++k) {
    if (std::sqrt(std::max(sp.eigenvalues[k], 0.0)) > kRankTol * smax) continue;
    std::vector<double> u(n);
    for (int r = 0; r < n; ++r) u[r] = sp.eigenvectors(r, k).real();
    null_vectors.push_back(std::move(u));
  }

  // For each null vector u, directions N_j = u_j B_a. Traceless basis
  // elements (a >= 1) first; the identity-content directions, which shift
  // element traces while preserving reconstruction, come last.
  std::vector<HermitianOperator> basis;
  basis.reserve(dsq);
  for (int a = 0; a < dsq; ++a) basis.push_back(hermitian_basis_element(d, a));

  auto push_direction = [&](const std::vector<double>& u, int a) {
    DualDirection dir;
    dir.reserve(n);
    for (int j = 0; j < n; ++j) dir.push_back(u[j] * basis[a]);
    out.kernel_basis.push_back(std::move(dir));
  };
  for (const auto& u : null_vectors)
    for (int a = 1; a < dsq; ++a) push_direction(u, a);
  for (const auto& u : null_vectors) push_direction(u, 0);

  out.dimension = static_cast<int>(out.kernel_basis.size());
  return out;
}

DualFrame perturb_dual(const DualSpace& s, const std::vector<double>& coeffs) {
  if (static_cast<int>(coeffs.size()) != s.dimension)
    throw std::invalid_argument("perturb_dual: coefficient count " +
                                std::to_string(coeffs.size()) + " != dual space dimension " +
                                std::to_string(s.dimension));
  const int n = s.canonical.size();
  std::vector<Matrix> acc;
  acc.reserve(n);
  for (int j = 0; j < n; ++j) acc.push_back(s.canonical.elements[j].matrix());
  for (int k = 0; k < s.dimension; ++k) {
    if (coeffs[k] == 0.0) continue;
    for (int j = 0; j < n; ++j)
      acc[j] = acc[j] + coeffs[k] * s.kernel_basis[k][j].matrix();
  }
  DualFrame out;
  out.dim = s.canonical.dim;
  out.labels = s.canonical.labels;
  out.elements.reserve(n);
  for (int j = 0; j < n; ++j) out.elements.emplace_back(hermitize(acc[j]));
  return out;
}

OptimizeResult optimize_dual_negativity(const Frame& f, int iters, double step0,
                                        std::uint64_t /*seed*/) {
  if (iters < 1) throw std::invalid_argument("optimize_dual_negativity: iters must be >= 1");
  if (step0 <= 0.0) throw std::invalid_argument("optimize_dual_negativity: step0 must be > 0");

  const DualSpace space = dual_space(f);
  const int dim = space.dimension;
  const int n = space.canonical.size();
  const int dsq = f.dim * f.dim;

  auto objective = [&](const DualFrame& d, int* arg_j, std::vector<Complex>* arg_v) {
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
      const Spectrum sp = eig_hermitian(d.elements[j]);
      const double lam = sp.eigenvalues.front();
      if (j == 0 || lam < best) {
        best = lam;
        if (arg_j) *arg_j = j;
        if (arg_v) {
          arg_v->resize(f.dim);
          for (int r = 0; r < f.dim; ++r) (*arg_v)[r] = sp.eigenvectors(r, 0);
        }
      }
    }
    return best;
  };

  OptimizeResult out;
  if (dim == 0) {
    out.best = space.canonical;
    out.value = objective(space.canonical, nullptr, nullptr);
    out.trace = {out.value};
    return out;
  }

  // Null-vector weights per direction index, matching dual_space ordering.
  // Each direction is N_j = u_j B_a with orthonormal B_a, so u_j = Tr(N_j B_a).
  const int n_null = dim / dsq;
  auto basis_index = [&](int idx) {
    return (idx < n_null * (dsq - 1)) ? 1 + idx % (dsq - 1) : 0;
  };
  std::vector<std::vector<double>> null_at(dim);
  for (int idx = 0; idx < dim; ++idx) {
    const HermitianOperator b = hermitian_basis_element(f.dim, basis_index(idx));
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) u[j] = trace_inner(space.kernel_basis[idx][j], b);
    null_at[idx] = std::move(u);
  }

  std::vector<double> theta(dim, 0.0);
  std::vector<double> best_theta = theta;
  double best_value = 0.0;
  bool have_best = false;

  for (int t = 1; t <= iters; ++t) {
    const DualFrame cur = perturb_dual(space, theta);
    int jstar = 0;
    std::vector<Complex> v;
    const double val = objective(cur, &jstar, &v);
    if (!have_best || val > best_value) {
      best_value = val;
      best_theta = theta;
      have_best = true;
    }
    out.trace.push_back(best_value);

    // Supergradient of min_j lambda_min at the attaining slot: the projector
    // onto the extremal eigenvector, projected on the kernel basis.
    const RealCoordinates pc = vectorize(projector(v));
    const double step = step0 / std::sqrt(static_cast<double>(t));
    for (int idx = 0; idx < dim; ++idx)
      theta[idx] += step * null_at[idx][jstar] * pc.coords[basis_index(idx)];
  }

  out.best = perturb_dual(space, best_theta);
  out.value = best_value;
  return out;
}

}  // namespace qpr
