#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpr/dual_engine.hpp"

namespace qpr {

// T rho: real vector over Omega summing to one.
struct QuasiProbState {
  std::vector<double> values;
  std::vector<std::string> labels;
};

// S E: real function over Omega; all values in [0,1] only when the dual is
// a set of density operators.
struct QuasiProbEffect {
  std::vector<double> values;
};

enum class NegativityVerdict { kFrameNegative, kDualNegative, kBothNegative };

const char* to_string(NegativityVerdict v);

struct StateWitness {
  int index = 0;
  HermitianOperator state;  // rank-1 projector onto the extremal eigenvector
};

struct EffectWitness {
  int index = 0;
  HermitianOperator effect;
  double value = 0.0;  // representation value outside [0,1]
};

struct NegativityReport {
  double frame_lambda_min = 0.0;  // min_j lambda_min(F_j)
  double dual_lambda_min = 0.0;   // min_j lambda_min(D_j)
  std::optional<StateWitness> state_witness;
  std::optional<EffectWitness> effect_witness;
  NegativityVerdict verdict = NegativityVerdict::kBothNegative;
};

// values_j = Tr(rho F_j). rho must be PSD and unit-trace within 1e-10; the
// error message names the violated property.
QuasiProbState rep_state(const Frame& f, const HermitianOperator& rho);

// values_j = Tr(E D_j). E must satisfy 0 <= E <= I within 1e-10.
QuasiProbEffect rep_effect(const DualFrame& d, const HermitianOperator& e);

struct BornCheck {
  double lhs = 0.0;       // Tr(rho E)
  double rhs = 0.0;       // sum_j (T rho)_j (S E)_j
  double residual = 0.0;  // |lhs - rhs|
};

BornCheck born_check(const Frame& f, const DualFrame& d,
                     const HermitianOperator& rho, const HermitianOperator& e);

// r_j = Tr(A D_j); for every state, sum_j r_j (T rho)_j = Tr(rho A).
std::vector<double> rep_observable(const DualFrame& d, const HermitianOperator& a);

// sum_j max(0, -q_j); zero iff q is a probability vector.
double negativity_state(const QuasiProbState& q);

// max_j dist(f_j, [0,1]); values above one count as negativity.
double negativity_effect(const QuasiProbEffect& f);

// Locates negativity in a frame/dual pair and produces single-shot witnesses:
// rank-1 projectors onto the extremal eigenvectors. A pair with no negativity
// on either side contradicts the structural no-go and raises
// NoNegativityError. validate_pair controls the reconstruction precondition
// check (tests disable it to exercise the violation branch).
NegativityReport certify_negativity(const Frame& f, const DualFrame& d,
                                    bool validate_pair = true);

}  // namespace qpr
