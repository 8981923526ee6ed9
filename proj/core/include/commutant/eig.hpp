#pragma once

#include <limits>
#include <vector>

#include "commutant/matrix.hpp"

namespace commutant {

// Eigensystem of a Hermitian matrix, eigenvalues ascending, eigenvectors in
// the columns of `vectors` (column k pairs with values[k]).
struct Spectrum {
  std::vector<double> values;
  CMatrix vectors;
};

// Throws NotHermitian when the relative defect exceeds herm_tol, and
// NoConvergence when the backend fails to reduce the matrix.
Spectrum hermitian_eig(const CMatrix& a, double herm_tol = 1e-10);

double min_eigenvalue(const CMatrix& a, double herm_tol = 1e-10);

// Kernel cutoff policy for Gram-operator rank decisions. An eigenvalue
// belongs to the kernel when it is <= rel_tol * lambda_max. The split must be
// clean: smallest kept / largest discarded >= min_gap, else AmbiguousRank.
struct RankPolicy {
  double rel_tol = 1e-10;
  double min_gap = 1e6;
};

struct KernelBasis {
  // D^2 x k, columns are orthonormal kernel vectors of the Gram operator.
  CMatrix vectors;
  // Spectral separation across the cutoff; +inf when nothing was discarded
  // or the kernel is empty.
  double gap = std::numeric_limits<double>::infinity();
  std::size_t dim() const { return vectors.cols(); }
};

// Common kernel of a family of linear constraint maps given as matrices
// acting on vec'd inputs (each rows x D^2). Forms the Gram operator
// sum_i A_i^H A_i and extracts its near-null eigenspace.
KernelBasis joint_nullspace(const std::vector<CMatrix>& constraints,
                            const RankPolicy& policy = {},
                            std::size_t dim_cap = kDefaultDimCap);

// Same extraction for a caller-assembled Gram operator (Hermitian PSD).
KernelBasis joint_nullspace_gram(const CMatrix& gram, const RankPolicy& policy = {});

}  // namespace commutant
