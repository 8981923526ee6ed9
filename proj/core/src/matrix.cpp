#include "commutant/matrix.hpp"

#include <cmath>
#include <string>

#include "compensated.hpp"

namespace commutant {

namespace {

void require_finite(const CMatrix& m, const char* what) {
  if (!all_finite(m)) {
    throw ValidationError(std::string(what) + ": entries must be finite");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionMismatch("CMatrix: entry count " + std::to_string(data_.size()) +
                            " does not match " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
  require_finite(*this, "CMatrix");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  CMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw DimensionMismatch("from_rows: ragged row " + std::to_string(i));
    }
    std::size_t j = 0;
    for (const auto& e : row) m(i, j++) = e;
    ++i;
  }
  require_finite(m, "from_rows");
  return m;
}

Complex& CMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) {
    throw DimensionMismatch("CMatrix::at: index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of " + std::to_string(rows_) +
                            "x" + std::to_string(cols_));
  }
  return data_[i * cols_ + j];
}

const Complex& CMatrix::at(std::size_t i, std::size_t j) const {
  return const_cast<CMatrix*>(this)->at(i, j);
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("matrix sum: shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionMismatch("matrix difference: shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) {
  for (auto& e : data_) e *= scale;
  return *this;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CMatrix out(a.rows(), b.cols());
  const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    Complex* out_row = out.data() + i * p;
    for (std::size_t k = 0; k < m; ++k) {
      const Complex aik = a(i, k);
      const Complex* b_row = b.data() + k * p;
      for (std::size_t j = 0; j < p; ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t dim_cap) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > dim_cap || cols > dim_cap) {
    throw SizeOverflow("kron: output " + std::to_string(rows) + "x" + std::to_string(cols) +
                       " exceeds dimension cap " + std::to_string(dim_cap));
  }
  CMatrix out(rows, cols);
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex av = a(i1, j1);
      if (av == Complex(0.0, 0.0)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        Complex* out_row = out.data() + (i1 * b.rows() + i2) * cols + j1 * b.cols();
        const Complex* b_row = b.data() + i2 * b.cols();
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) out_row[j2] += av * b_row[j2];
      }
    }
  }
  return out;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

CMatrix conjugate(const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.entries()[k] = std::conj(a.entries()[k]);
  return out;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

CMatrix apply_modifier(const CMatrix& a, Modifier m) {
  switch (m) {
    case Modifier::Id:
      return a;
    case Modifier::Conj:
      return conjugate(a);
    case Modifier::Transpose:
      return transpose(a);
    case Modifier::ConjTranspose:
      return adjoint(a);
  }
  throw BadParams("apply_modifier: unknown modifier");
}

Complex trace(const CMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("trace: matrix not square");
  detail::CompensatedComplexSum s;
  for (std::size_t i = 0; i < a.rows(); ++i) s.add(a(i, i));
  return s.value();
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("hs_inner: shape mismatch");
  }
  detail::CompensatedComplexSum s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    s.add(std::conj(a.entries()[k]) * b.entries()[k]);
  }
  return s.value();
}

double frobenius_norm(const CMatrix& a) {
  detail::CompensatedSum s;
  for (const auto& e : a.entries()) s.add(std::norm(e));
  return std::sqrt(s.value());
}

double distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("distance: shape mismatch");
  }
  detail::CompensatedSum s;
  for (std::size_t k = 0; k < a.size(); ++k) s.add(std::norm(a.entries()[k] - b.entries()[k]));
  return std::sqrt(s.value());
}

double hermiticity_defect(const CMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("hermiticity_defect: matrix not square");
  const double norm = frobenius_norm(a);
  if (norm == 0.0) return 0.0;
  detail::CompensatedSum s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s.add(std::norm(a(i, j) - std::conj(a(j, i))));
  return std::sqrt(s.value()) / norm;
}

double unitarity_defect(const CMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("unitarity_defect: matrix not square");
  CMatrix g = matmul(adjoint(a), a);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return frobenius_norm(g);
}

bool all_finite(const CMatrix& a) {
  for (const auto& e : a.entries()) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

std::vector<Complex> vec(const CMatrix& a) {
  std::vector<Complex> v(a.size());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) v[j * a.rows() + i] = a(i, j);
  return v;
}

CMatrix unvec(const std::vector<Complex>& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) {
    throw DimensionMismatch("unvec: vector length " + std::to_string(v.size()) +
                            " does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
  CMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
  return m;
}

}  // namespace commutant
