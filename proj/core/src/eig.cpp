#include "commutant/eig.hpp"

#include <complex>
#include <string>

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace commutant {

Spectrum hermitian_eig(const CMatrix& a, double herm_tol) {
  if (!a.is_square()) throw DimensionMismatch("hermitian_eig: matrix not square");
  const double defect = hermiticity_defect(a);
  if (defect > herm_tol) {
    throw NotHermitian("hermitian_eig: relative hermiticity defect " +
                       std::to_string(defect) + " exceeds " + std::to_string(herm_tol));
  }
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Spectrum out;
  out.values.resize(a.rows());
  if (n == 0) {
    out.vectors = CMatrix(0, 0);
    return out;
  }
  // zheevd overwrites the input with the eigenvectors; with LAPACK_ROW_MAJOR
  // they land in the columns of the row-major buffer.
  CMatrix work = a;
  lapack_int info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, 'V', 'U', n, work.data(), n,
                                   out.values.data());
  if (info != 0) {
    throw NoConvergence("hermitian_eig: zheevd failed with info=" + std::to_string(info));
  }
  out.vectors = std::move(work);
  return out;
}

double min_eigenvalue(const CMatrix& a, double herm_tol) {
  Spectrum s = hermitian_eig(a, herm_tol);
  if (s.values.empty()) throw BadParams("min_eigenvalue: empty matrix");
  return s.values.front();
}

KernelBasis joint_nullspace_gram(const CMatrix& gram, const RankPolicy& policy) {
  if (!gram.is_square()) throw DimensionMismatch("joint_nullspace: Gram not square");
  const std::size_t d = gram.rows();
  Spectrum s = hermitian_eig(gram);

  const double lambda_max = d == 0 ? 0.0 : s.values.back();
  // An all-zero Gram (no effective constraints) has a full kernel.
  const double cutoff = policy.rel_tol * lambda_max;

  std::size_t kernel_dim = 0;
  while (kernel_dim < d && s.values[kernel_dim] <= cutoff) ++kernel_dim;

  KernelBasis out;
  if (kernel_dim < d && kernel_dim > 0) {
    const double largest_kept = s.values[kernel_dim - 1];
    const double smallest_discarded = s.values[kernel_dim];
    out.gap = largest_kept <= 0.0 ? std::numeric_limits<double>::infinity()
                                  : smallest_discarded / largest_kept;
    if (out.gap < policy.min_gap) {
      throw AmbiguousRank("joint_nullspace: spectral gap " + std::to_string(out.gap) +
                              " below required " + std::to_string(policy.min_gap) +
                              " at cutoff index " + std::to_string(kernel_dim),
                          out.gap);
    }
  }

  out.vectors = CMatrix(d, kernel_dim);
  for (std::size_t k = 0; k < kernel_dim; ++k)
    for (std::size_t i = 0; i < d; ++i) out.vectors(i, k) = s.vectors(i, k);
  return out;
}

KernelBasis joint_nullspace(const std::vector<CMatrix>& constraints,
                            const RankPolicy& policy, std::size_t dim_cap) {
  if (constraints.empty()) throw BadParams("joint_nullspace: no constraints given");
  const std::size_t d = constraints.front().cols();
  if (d > dim_cap) {
    throw SizeOverflow("joint_nullspace: Gram dimension " + std::to_string(d) +
                       " exceeds cap " + std::to_string(dim_cap));
  }
  CMatrix gram(d, d);
  for (const auto& c : constraints) {
    if (c.cols() != d) throw DimensionMismatch("joint_nullspace: constraint width mismatch");
    // gram += c^H c
    for (std::size_t r = 0; r < c.rows(); ++r) {
      const Complex* row = c.data() + r * d;
      for (std::size_t i = 0; i < d; ++i) {
        const Complex ci = std::conj(row[i]);
        if (ci == Complex(0.0, 0.0)) continue;
        Complex* gr = gram.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) gr[j] += ci * row[j];
      }
    }
  }
  return joint_nullspace_gram(gram, policy);
}

}  // namespace commutant
