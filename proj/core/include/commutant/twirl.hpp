#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "commutant/solver.hpp"

namespace commutant {

struct TwirlResult {
  CMatrix output;
  int n_samples = 0;
  Complex trace_in{0.0, 0.0};
  Complex trace_out{0.0, 0.0};
  // Frobenius distance to the exact projection when a reference basis is given
  std::optional<double> error_vs_exact;
};

// Monte Carlo average of g w g^H over n_samples draws, each g a product of
// independently assigned word instances (the product mixes onto the group the
// word image generates, so the large-N limit is the commutant projection even
// for words that are not homomorphisms). Accumulated with compensated
// summation. `reference` must be a basis for the same word.
TwirlResult mc_twirl(const CMatrix& w, const SymmetryWord& word, int n_samples,
                     std::uint64_t seed, const CommutantBasis* reference = nullptr);

// Orthogonal projection onto the span of an HS-orthonormal basis. Idempotent
// and trace preserving on commutant bases that contain the identity
// direction.
CMatrix exact_project(const CMatrix& w, const CommutantBasis& basis);

struct ConvergencePoint {
  int n_samples = 0;
  double error = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergencePoint> points;
  // least-squares slope of log error against log N; absent when the input is
  // already invariant and the errors sit at the noise floor
  std::optional<double> slope;
};

// Independent Monte Carlo estimates at each schedule point, measured against
// the exact projection. Schedule must be positive and strictly increasing.
ConvergenceReport convergence_report(const CMatrix& w, const SymmetryWord& word,
                                     const CommutantBasis& basis,
                                     const std::vector<int>& schedule, std::uint64_t seed);

}  // namespace commutant
