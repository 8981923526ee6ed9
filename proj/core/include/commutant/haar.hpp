#pragma once

#include <cstdint>

#include "commutant/matrix.hpp"
#include "commutant/rng.hpp"

namespace commutant {

// Haar-distributed n x n unitary: complex Ginibre sample followed by
// Gram-Schmidt with the R-diagonal kept real positive, which is exactly the
// phase convention that makes QR sampling Haar.
CMatrix sample_haar_unitary(std::size_t n, RngStream& rng);
CMatrix sample_haar_unitary(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

// Same construction over the reals, Haar on O(n).
CMatrix sample_haar_orthogonal(std::size_t n, RngStream& rng);
CMatrix sample_haar_orthogonal(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0);

// Uniform random permutation matrix (Fisher-Yates).
CMatrix sample_permutation(std::size_t n, RngStream& rng);

}  // namespace commutant
