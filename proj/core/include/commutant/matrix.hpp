#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "commutant/errors.hpp"

namespace commutant {

using Complex = std::complex<double>;

// Default cap on any single matrix dimension produced by tensor products.
inline constexpr std::size_t kDefaultDimCap = 4096;

// Dense row-major complex matrix. Entries are required to be finite whenever
// a matrix is built from user-supplied data; internal arithmetic trusts its
// inputs.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex& at(std::size_t i, std::size_t j);
  const Complex& at(std::size_t i, std::size_t j) const;

  std::vector<Complex>& entries() noexcept { return data_; }
  const std::vector<Complex>& entries() const noexcept { return data_; }
  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex scale);

  friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
  friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
  friend CMatrix operator*(CMatrix lhs, Complex scale) { return lhs *= scale; }
  friend CMatrix operator*(Complex scale, CMatrix rhs) { return rhs *= scale; }
  friend CMatrix operator-(CMatrix m) { return m *= Complex(-1.0, 0.0); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Factor modifiers in tensor words: plain, entrywise conjugate, transpose,
// conjugate transpose.
enum class Modifier { Id, Conj, Transpose, ConjTranspose };

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t dim_cap = kDefaultDimCap);

CMatrix transpose(const CMatrix& a);
CMatrix conjugate(const CMatrix& a);
CMatrix adjoint(const CMatrix& a);
CMatrix apply_modifier(const CMatrix& a, Modifier m);

Complex trace(const CMatrix& a);
// tr(a^H b), conjugate-linear in the first argument. Compensated summation.
Complex hs_inner(const CMatrix& a, const CMatrix& b);
double frobenius_norm(const CMatrix& a);
double distance(const CMatrix& a, const CMatrix& b);

// ||a - a^H||_F / ||a||_F, zero for the zero matrix.
double hermiticity_defect(const CMatrix& a);
// ||a^H a - I||_F
double unitarity_defect(const CMatrix& a);

bool all_finite(const CMatrix& a);

// Column-stacking: vec(a)[j * rows + i] = a(i, j).
std::vector<Complex> vec(const CMatrix& a);
CMatrix unvec(const std::vector<Complex>& v, std::size_t rows, std::size_t cols);

}  // namespace commutant
