#pragma once

#include <cstdint>
#include <vector>

#include "qpr/frame_lab.hpp"

namespace qpr {

// Companion family {D_j} satisfying the reconstruction formula
// A = sum_j Tr(F_j A) D_j for its parent frame. Canonical duals carry unit
// element traces; perturbations along identity-content kernel directions
// shift traces while preserving reconstruction.
struct DualFrame {
  int dim = 0;
  std::vector<HermitianOperator> elements;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(elements.size()); }
};

// One kernel direction: an n-tuple (N_j) with sum_j Tr(F_j A) N_j = 0 for
// every Hermitian A.
using DualDirection = std::vector<HermitianOperator>;

// The affine space of duals of a frame: canonical point plus an orthonormal
// kernel basis of dimension d^2 * (n - d^2). Basis order: for each null
// vector u^(k) of G^T, first the d^2 - 1 traceless Hermitian directions
// (trace-preserving), then all identity directions u^(k)_j I/sqrt(d) last.
struct DualSpace {
  DualFrame canonical;
  std::vector<DualDirection> kernel_basis;
  int dimension = 0;
};

// Minimal-norm dual subject to unit element traces: the pseudoinverse
// arrangement (G^T G)^{-1} G^T with its identity row replaced by the forced
// value 1^T/sqrt(d). For frames whose elements share a common trace the
// replacement is a no-op and this is the plain pseudoinverse dual.
// Throws when the frame is not informationally complete, naming the rank.
DualFrame canonical_dual(const Frame& f);

struct ReconstructionCheck {
  double max_residual = 0.0;
};

// Max over `trials` random Hermitian A of ||A - sum_j Tr(F_j A) D_j||_max.
ReconstructionCheck verify_reconstruction(const Frame& f, const DualFrame& d,
                                          int trials, std::uint64_t seed);

// Same residual measured over the d^2 fixed-basis probes (deterministic).
double reconstruction_residual_probe(const Frame& f, const DualFrame& d);

DualSpace dual_space(const Frame& f);

// canonical + sum_k coeffs[k] * N^(k). coeffs.size() must equal dimension.
DualFrame perturb_dual(const DualSpace& s, const std::vector<double>& coeffs);

struct OptimizeResult {
  DualFrame best;
  double value = 0.0;               // min_j lambda_min over the best iterate
  std::vector<double> trace;        // best-so-far objective per iteration
};

// Maximizes f(D) = min_j lambda_min(D_j) over the affine dual space by
// projected subgradient ascent with step size step0/sqrt(t). Ties in the
// attaining index broken by lowest j; eigenvector choice inherits the
// deterministic rules of eig_hermitian. The schedule is deterministic; seed
// is recorded by callers for reproducibility bookkeeping only.
OptimizeResult optimize_dual_negativity(const Frame& f, int iters, double step0,
                                        std::uint64_t seed = 0);

}  // namespace qpr
