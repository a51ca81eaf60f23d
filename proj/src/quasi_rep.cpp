#include "qpr/quasi_rep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpr/errors.hpp"

namespace qpr {

namespace {

constexpr double kInputTol = 1e-10;  // state/effect admission tolerance
constexpr double kZeroTol = 1e-10;   // |lambda_min| below this counts as zero

void check_state(const HermitianOperator& rho) {
  const PsdReport p = psd_check(rho, kInputTol);
  if (!p.verdict)
    throw std::invalid_argument("rep_state: input is not positive semidefinite (lambda_min = " +
                                std::to_string(p.lambda_min) + ")");
  const double tr = rho.trace();
  if (std::abs(tr - 1.0) > kInputTol)
    throw std::invalid_argument("rep_state: input trace " + std::to_string(tr) + " != 1");
}

void check_effect(const HermitianOperator& e) {
  const Spectrum s = eig_hermitian(e);
  if (s.eigenvalues.front() < -kInputTol)
    throw std::invalid_argument("rep_effect: input is not positive semidefinite (lambda_min = " +
                                std::to_string(s.eigenvalues.front()) + ")");
  if (s.eigenvalues.back() > 1.0 + kInputTol)
    throw std::invalid_argument("rep_effect: input exceeds the identity (lambda_max = " +
                                std::to_string(s.eigenvalues.back()) + ")");
}

}  // namespace

const char* to_string(NegativityVerdict v) {
  switch (v) {
    case NegativityVerdict::kFrameNegative: return "FRAME_NEGATIVE";
    case NegativityVerdict::kDualNegative: return "DUAL_NEGATIVE";
    case NegativityVerdict::kBothNegative: return "BOTH_NEGATIVE";
  }
  return "UNKNOWN";
}

QuasiProbState rep_state(const Frame& f, const HermitianOperator& rho) {
  if (rho.dim() != f.dim) throw std::invalid_argument("rep_state: dimension mismatch");
  check_state(rho);
  QuasiProbState q;
  q.labels = f.labels;
  q.values.reserve(f.size());
  for (const auto& fj : f.elements) q.values.push_back(trace_inner(rho, fj));
  return q;
}

QuasiProbEffect rep_effect(const DualFrame& d, const HermitianOperator& e) {
  if (e.dim() != d.dim) throw std::invalid_argument("rep_effect: dimension mismatch");
  check_effect(e);
  QuasiProbEffect out;
  out.values.reserve(d.size());
  for (const auto& dj : d.elements) out.values.push_back(trace_inner(e, dj));
  return out;
}

BornCheck born_check(const Frame& f, const DualFrame& d,
                     const HermitianOperator& rho, const HermitianOperator& e) {
  const QuasiProbState t = rep_state(f, rho);
  const QuasiProbEffect s = rep_effect(d, e);
  if (t.values.size() != s.values.size())
    throw std::invalid_argument("born_check: frame and dual sizes differ");
  BornCheck out;
  out.lhs = trace_inner(rho, e);
  for (std::size_t j = 0; j < t.values.size(); ++j) out.rhs += t.values[j] * s.values[j];
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

std::vector<double> rep_observable(const DualFrame& d, const HermitianOperator& a) {
  if (a.dim() != d.dim) throw std::invalid_argument("rep_observable: dimension mismatch");
  std::vector<double> r;
  r.reserve(d.size());
  for (const auto& dj : d.elements) r.push_back(trace_inner(a, dj));
  return r;
}

double negativity_state(const QuasiProbState& q) {
  double s = 0.0;
  for (double v : q.values) s += std::max(0.0, -v);
  return s;
}

double negativity_effect(const QuasiProbEffect& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::max(v - 1.0, -v));
  return std::max(m, 0.0);
}

NegativityReport certify_negativity(const Frame& f, const DualFrame& d, bool validate_pair) {
  if (f.dim != d.dim || f.size() != d.size())
    throw std::invalid_argument("certify_negativity: frame and dual are misaligned");
  if (validate_pair) {
    const double res = reconstruction_residual_probe(f, d);
    if (res > 1e-6)
      throw std::invalid_argument("certify_negativity: pair fails reconstruction (probe residual " +
                                  std::to_string(res) + ")");
  }

  NegativityReport r;
  int frame_j = 0, dual_j = 0;
  std::vector<Complex> frame_v, dual_v;
  for (int j = 0; j < f.size(); ++j) {
    const Spectrum sf = eig_hermitian(f.elements[j]);
    if (j == 0 || sf.eigenvalues.front() < r.frame_lambda_min) {
      r.frame_lambda_min = sf.eigenvalues.front();
      frame_j = j;
      frame_v.assign(f.dim, 0.0);
      for (int i = 0; i < f.dim; ++i) frame_v[i] = sf.eigenvectors(i, 0);
    }
    const Spectrum sd = eig_hermitian(d.elements[j]);
    if (j == 0 || sd.eigenvalues.front() < r.dual_lambda_min) {
      r.dual_lambda_min = sd.eigenvalues.front();
      dual_j = j;
      dual_v.assign(f.dim, 0.0);
      for (int i = 0; i < f.dim; ++i) dual_v[i] = sd.eigenvectors(i, 0);
    }
  }

  // A dual element with trace above one also certifies effect negativity:
  // S(I) lands outside [0,1] at that index.
  double trace_excess = 0.0;
  int trace_j = 0;
  for (int j = 0; j < d.size(); ++j) {
    const double ex = d.elements[j].trace() - 1.0;
    if (ex > trace_excess) {
      trace_excess = ex;
      trace_j = j;
    }
  }

  const bool frame_negative = r.frame_lambda_min < -kZeroTol;
  const bool dual_negative = r.dual_lambda_min < -kZeroTol || trace_excess > kZeroTol;
  if (!frame_negative && !dual_negative)
    throw NoNegativityError(
        "certify_negativity: no negativity found on either side (frame lambda_min = " +
        std::to_string(r.frame_lambda_min) + ", dual lambda_min = " +
        std::to_string(r.dual_lambda_min) + "); the pair is invalid or a bug is present");

  if (frame_negative)
    r.state_witness = StateWitness{frame_j, projector(frame_v)};
  if (dual_negative) {
    if (r.dual_lambda_min < -kZeroTol) {
      r.effect_witness = EffectWitness{dual_j, projector(dual_v), r.dual_lambda_min};
    } else {
      r.effect_witness =
          EffectWitness{trace_j, identity_operator(d.dim), 1.0 + trace_excess};
    }
  }
  r.verdict = frame_negative && dual_negative ? NegativityVerdict::kBothNegative
              : frame_negative                ? NegativityVerdict::kFrameNegative
                                              : NegativityVerdict::kDualNegative;
  return r;
}

}  // namespace qpr
