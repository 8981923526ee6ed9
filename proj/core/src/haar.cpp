#include "commutant/haar.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace commutant {

namespace {

// Modified Gram-Schmidt on the columns, two passes per column. The positive
// column norms play the role of the R diagonal, so no phase fix-up is needed
// afterwards. Near-dependent columns have probability zero; the fallback
// refills the offending column deterministically from the stream.
void orthonormalize_columns(CMatrix& q, RngStream& rng, bool complex_entries) {
  const std::size_t n = q.rows();
  for (std::size_t j = 0; j < q.cols(); ++j) {
    for (int attempt = 0;; ++attempt) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < j; ++k) {
          Complex c(0.0, 0.0);
          for (std::size_t i = 0; i < n; ++i) c += std::conj(q(i, k)) * q(i, j);
          for (std::size_t i = 0; i < n; ++i) q(i, j) -= c * q(i, k);
        }
      }
      double norm2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm2 += std::norm(q(i, j));
      const double norm = std::sqrt(norm2);
      if (norm > 1e-12 * std::sqrt(static_cast<double>(n))) {
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
        break;
      }
      if (attempt > 8) {
        throw NoConvergence("haar sampling: degenerate Ginibre column persisted");
      }
      for (std::size_t i = 0; i < n; ++i) {
        q(i, j) = complex_entries ? rng.next_complex_gaussian()
                                  : Complex(rng.next_gaussian(), 0.0);
      }
    }
  }
}

}  // namespace

CMatrix sample_haar_unitary(std::size_t n, RngStream& rng) {
  if (n == 0) throw BadParams("sample_haar_unitary: n must be positive");
  CMatrix q(n, n);
  for (auto& e : q.entries()) e = rng.next_complex_gaussian();
  orthonormalize_columns(q, rng, true);
  return q;
}

CMatrix sample_haar_unitary(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  RngStream rng(seed, stream);
  return sample_haar_unitary(n, rng);
}

CMatrix sample_haar_orthogonal(std::size_t n, RngStream& rng) {
  if (n == 0) throw BadParams("sample_haar_orthogonal: n must be positive");
  CMatrix q(n, n);
  for (auto& e : q.entries()) e = Complex(rng.next_gaussian(), 0.0);
  orthonormalize_columns(q, rng, false);
  return q;
}

CMatrix sample_haar_orthogonal(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  RngStream rng(seed, stream);
  return sample_haar_orthogonal(n, rng);
}

CMatrix sample_permutation(std::size_t n, RngStream& rng) {
  if (n == 0) throw BadParams("sample_permutation: n must be positive");
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(image[i - 1], image[j]);
  }
  CMatrix p(n, n);
  for (std::size_t col = 0; col < n; ++col) p(image[col], col) = 1.0;
  return p;
}

}  // namespace commutant
