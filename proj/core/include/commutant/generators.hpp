#pragma once

#include <vector>

#include "commutant/word.hpp"

namespace commutant {

// General 2x2 unitary with determinant e^{i phi}:
//   [ e^{i alpha} cos t          e^{i beta} sin t        ]
//   [ -e^{i(phi-beta)} sin t     e^{i(phi-alpha)} cos t  ]
CMatrix unitary_2x2(double theta, double alpha, double beta, double phi);

// Families of exactly representable non-Haar group elements. These pin down
// commutants with structure a finite random sample can miss (permutations fix
// real alignment, phase diagonals split degenerate index pairs, the proof
// matrices kill accidental invariants at machine precision).
enum class GeneratorKind {
  Permutation,        // transposition P_ij
  PhaseDiagonal,      // diag of distinct roots / irrational phases
  PhasedPermutation,  // P_ij with columns i, j phased by theta1, theta2
  ProofU1,            // [[0,1],[i,0]]  (+) I
  ProofU2,            // [[0,i],[1,0]]  (+) I
  ProofU3,            // [[0,0,1],[0,1,0],[i,0,0]] (+) I, needs n >= 3
  UniformRow,         // DFT matrix, every row flat in modulus
};

struct GeneratorParams {
  // 1-based indices of the swapped pair, matching the P_ij naming
  std::size_t i = 1;
  std::size_t j = 2;
  double theta1 = 2.399963229728653;  // golden angle
  double theta2 = 1.246979603717467;
};

std::vector<CMatrix> structured_generators(GeneratorKind kind, std::size_t n,
                                           const GeneratorParams& params = {});

// Transposition of basis vectors i and j, 1-based.
CMatrix permutation_matrix(std::size_t n, std::size_t i, std::size_t j);

// Unitary DFT matrix, entries omega^{jk} / sqrt(n) with omega = e^{-2 pi i / n}.
CMatrix fourier_matrix(std::size_t n);

// The full structured battery for one variable of the given group, used to
// harden random-sample commutant estimates and invariance checks.
std::vector<CMatrix> structured_symmetry_set(Group group, std::size_t n);

}  // namespace commutant
