#pragma once

#include <complex>
#include <string>
#include <vector>

#include "commutant/matrix.hpp"
#include "commutant/rng.hpp"

namespace test_helpers {

using commutant::CMatrix;
using commutant::Complex;

inline double entry_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return commutant::distance(a, b);
}

inline CMatrix random_complex(std::size_t rows, std::size_t cols, std::uint64_t seed,
                              std::uint64_t stream = 900) {
  commutant::RngStream rng(seed, stream);
  CMatrix m(rows, cols);
  for (auto& e : m.entries()) e = rng.next_complex_gaussian();
  return m;
}

inline CMatrix random_hermitian(std::size_t n, std::uint64_t seed, std::uint64_t stream = 901) {
  CMatrix g = random_complex(n, n, seed, stream);
  CMatrix h = commutant::adjoint(g);
  h += g;
  h *= Complex(0.5, 0.0);
  return h;
}

// projection of w onto the span of an HS-orthonormal set
inline CMatrix project_span(const std::vector<CMatrix>& basis, const CMatrix& w) {
  CMatrix out(w.rows(), w.cols());
  for (const auto& b : basis) {
    CMatrix scaled = b;
    scaled *= commutant::hs_inner(b, w);
    out += scaled;
  }
  return out;
}

inline double span_residual(const std::vector<CMatrix>& basis, const CMatrix& w) {
  return commutant::distance(w, project_span(basis, w));
}

inline bool any_contains(const std::vector<std::string>& haystack, const std::string& needle) {
  for (const auto& s : haystack) {
    if (s.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace test_helpers
