#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "commutant/eig.hpp"
#include "commutant/operators.hpp"
#include "commutant/word.hpp"

namespace commutant {

struct SolveOptions {
  // initial Haar sample count; stability is probed with two extra samples and
  // the count escalates to max_samples before giving up
  int n_samples = 4;
  int max_samples = 12;
  // fresh generators (disjoint substream) for the final invariance re-check
  int verify_samples = 8;
  std::uint64_t seed = 0;
  RankPolicy rank;
  double verify_tol = 1e-8;
  // cap on the Gram dimension D^2
  std::size_t gram_dim_cap = kDefaultDimCap;
  // append exactly representable group elements for single-variable words
  bool append_structured = true;
};

// HS-orthonormal basis of the commutant of a word's image, presented with
// the identity direction first and a deterministic phase per element.
struct CommutantBasis {
  SymmetryWord word;
  std::vector<CMatrix> basis;
  double gap = 0.0;
  // worst invariance residual seen during the post-solve re-check
  double residual = 0.0;
  int samples_used = 0;
  std::uint64_t seed = 0;

  std::size_t dim() const noexcept { return basis.size(); }
  std::size_t total_dim() const noexcept { return word.total_dim(); }
};

CommutantBasis commutant_basis(const SymmetryWord& word, const SolveOptions& opts = {});

// Max of ||g w g^H - w||_F over `trials` Haar generators plus the structured
// battery (single-variable words). Pure measurement, no thresholding.
double check_invariance(const CMatrix& w, const SymmetryWord& word, int trials = 50,
                        std::uint64_t seed = 0);

struct RecognitionReport {
  enum class Verdict { ExactSpan, Partial, Unrecognized };

  struct ElementFit {
    // one coefficient per library entry, in library order
    std::vector<std::pair<std::string, Complex>> coefficients;
    double residual = 0.0;
    bool recognized = false;
  };

  std::vector<ElementFit> elements;
  Verdict verdict = Verdict::Unrecognized;
  double fit_tol = 0.0;
};

std::string to_string(RecognitionReport::Verdict v);

// Least-squares fit of every basis element against the library span.
// Throws SingularGram when the library itself is numerically dependent.
RecognitionReport recognize_basis(const CommutantBasis& basis, const OperatorLibrary& lib,
                                  double fit_tol = 1e-8);

// outer x outer grid of equally sized sub-blocks; outer must divide the size.
std::vector<std::vector<CMatrix>> block_partition(const CMatrix& w, std::size_t outer);

struct BlockViolation {
  std::size_t outer_i = 0, outer_j = 0;  // 1-based block coordinates
  std::size_t sub_i = 0, sub_j = 0;      // 1-based within the outer block, 0 if unused
  double magnitude = 0.0;
  std::string what;
};

struct BlockCheck {
  bool pass = true;
  // fitted coefficients: two-factor words give (x, 0) with w ~ x I; the
  // three-factor ladder gives w ~ x I + y F(x)I
  Complex x{0.0, 0.0};
  Complex y{0.0, 0.0};
  std::vector<BlockViolation> violations;
};

// Checks the block pattern forced on invariants of conjugation words:
//   V,V^H     diagonal n x n blocks equal to one common scalar, zero off-diagonal
//   V,V,V^H   sub-block ladder of x I + y F(x)I
// Applies to single-variable unitary words of those two shapes (BadParams
// otherwise). Reports violations, never throws on a failed check.
BlockCheck verify_block_element(const CMatrix& w, const SymmetryWord& word, double tol = 1e-9);

// Runs verify_block_element over a whole basis; throws StructureViolation if
// any element fails.
std::vector<BlockCheck> verify_block_structure(const CommutantBasis& basis, double tol = 1e-9);

// Human-readable adjudication notes: dimensions beyond a closed-form family,
// unrecognized basis elements.
std::vector<std::string> commutant_flags(const CommutantBasis& basis,
                                         const RecognitionReport& recognition);

}  // namespace commutant
