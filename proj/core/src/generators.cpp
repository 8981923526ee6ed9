#include "commutant/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace commutant {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex phase(double t) { return {std::cos(t), std::sin(t)}; }

void require_pair(std::size_t n, std::size_t i, std::size_t j, const char* what) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw BadParams(std::string(what) + ": need distinct 1-based indices <= " +
                    std::to_string(n));
  }
}

CMatrix embed_top_left(const CMatrix& block, std::size_t n) {
  if (block.rows() > n) throw BadParams("embed_top_left: block larger than target");
  CMatrix m = CMatrix::identity(n);
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) m(i, j) = block(i, j);
  return m;
}

}  // namespace

CMatrix unitary_2x2(double theta, double alpha, double beta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  CMatrix u(2, 2);
  u(0, 0) = phase(alpha) * c;
  u(0, 1) = phase(beta) * s;
  u(1, 0) = -phase(phi - beta) * s;
  u(1, 1) = phase(phi - alpha) * c;
  return u;
}

CMatrix permutation_matrix(std::size_t n, std::size_t i, std::size_t j) {
  require_pair(n, i, j, "permutation_matrix");
  CMatrix p = CMatrix::identity(n);
  p(i - 1, i - 1) = 0.0;
  p(j - 1, j - 1) = 0.0;
  p(i - 1, j - 1) = 1.0;
  p(j - 1, i - 1) = 1.0;
  return p;
}

CMatrix fourier_matrix(std::size_t n) {
  if (n == 0) throw BadParams("fourier_matrix: n must be positive");
  CMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      f(j, k) = scale * phase(-kTwoPi * static_cast<double>(j * k) / static_cast<double>(n));
  return f;
}

std::vector<CMatrix> structured_generators(GeneratorKind kind, std::size_t n,
                                           const GeneratorParams& params) {
  if (n == 0) throw BadParams("structured_generators: n must be positive");
  std::vector<CMatrix> out;
  switch (kind) {
    case GeneratorKind::Permutation:
      out.push_back(permutation_matrix(n, params.i, params.j));
      break;
    case GeneratorKind::PhaseDiagonal: {
      // distinct (n+1)-st roots of unity: no repeated phase, never +-1 twice
      CMatrix d(n, n);
      for (std::size_t k = 0; k < n; ++k)
        d(k, k) = phase(kTwoPi * static_cast<double>(k + 1) / static_cast<double>(n + 1));
      out.push_back(d);
      // irrational phase progression, rationally independent of the first
      CMatrix g(n, n);
      const double golden = 0.6180339887498948482;
      for (std::size_t k = 0; k < n; ++k)
        g(k, k) = phase(kTwoPi * golden * static_cast<double>(k + 1));
      out.push_back(g);
      break;
    }
    case GeneratorKind::PhasedPermutation: {
      require_pair(n, params.i, params.j, "structured_generators");
      CMatrix p = permutation_matrix(n, params.i, params.j);
      for (std::size_t r = 0; r < n; ++r) {
        p(r, params.i - 1) *= phase(params.theta1);
        p(r, params.j - 1) *= phase(params.theta2);
      }
      out.push_back(p);
      break;
    }
    case GeneratorKind::ProofU1: {
      if (n < 2) throw BadParams("structured_generators: ProofU1 needs n >= 2");
      CMatrix b(2, 2);
      b(0, 1) = 1.0;
      b(1, 0) = Complex(0.0, 1.0);
      out.push_back(embed_top_left(b, n));
      break;
    }
    case GeneratorKind::ProofU2: {
      if (n < 2) throw BadParams("structured_generators: ProofU2 needs n >= 2");
      CMatrix b(2, 2);
      b(0, 1) = Complex(0.0, 1.0);
      b(1, 0) = 1.0;
      out.push_back(embed_top_left(b, n));
      break;
    }
    case GeneratorKind::ProofU3: {
      if (n < 3) throw BadParams("structured_generators: ProofU3 needs n >= 3");
      CMatrix b(3, 3);
      b(0, 2) = 1.0;
      b(1, 1) = 1.0;
      b(2, 0) = Complex(0.0, 1.0);
      out.push_back(embed_top_left(b, n));
      break;
    }
    case GeneratorKind::UniformRow:
      out.push_back(fourier_matrix(n));
      break;
  }
  return out;
}

std::vector<CMatrix> structured_symmetry_set(Group group, std::size_t n) {
  if (n == 0) throw BadParams("structured_symmetry_set: n must be positive");
  std::vector<CMatrix> out;
  const auto add = [&](std::vector<CMatrix> more) {
    for (auto& m : more) out.push_back(std::move(m));
  };

  switch (group) {
    case Group::Unitary: {
      if (n == 1) {
        CMatrix u(1, 1);
        u(0, 0) = phase(2.399963229728653);
        out.push_back(u);
        break;
      }
      GeneratorParams p;
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        p.i = i;
        p.j = i + 1;
        add(structured_generators(GeneratorKind::Permutation, n, p));
        add(structured_generators(GeneratorKind::PhasedPermutation, n, p));
      }
      add(structured_generators(GeneratorKind::PhaseDiagonal, n));
      add(structured_generators(GeneratorKind::ProofU1, n));
      add(structured_generators(GeneratorKind::ProofU2, n));
      if (n >= 3) add(structured_generators(GeneratorKind::ProofU3, n));
      add(structured_generators(GeneratorKind::UniformRow, n));
      break;
    }
    case Group::Orthogonal: {
      if (n == 1) {
        CMatrix u(1, 1);
        u(0, 0) = -1.0;
        out.push_back(u);
        break;
      }
      if (n == 2) {
        // the four elements pinning the 2x2 orthogonal commutant
        out.push_back(permutation_matrix(2, 1, 2));
        out.push_back(CMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}));
        const double r = 1.0 / std::sqrt(2.0);
        out.push_back(CMatrix::from_rows({{r, -r}, {r, r}}));
        out.push_back(CMatrix::from_rows({{r, r}, {r, -r}}));
        break;
      }
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        out.push_back(permutation_matrix(n, i, i + 1));
        // planar rotation by the golden angle in coordinates (i, i+1)
        CMatrix rot = CMatrix::identity(n);
        const double t = 2.399963229728653;
        rot(i - 1, i - 1) = std::cos(t);
        rot(i - 1, i) = -std::sin(t);
        rot(i, i - 1) = std::sin(t);
        rot(i, i) = std::cos(t);
        out.push_back(rot);
      }
      {
        CMatrix flip = CMatrix::identity(n);
        flip(0, 0) = -1.0;
        out.push_back(flip);
      }
      break;
    }
    case Group::Permutation: {
      if (n == 1) {
        out.push_back(CMatrix::identity(1));
        break;
      }
      for (std::size_t i = 1; i + 1 <= n; ++i) out.push_back(permutation_matrix(n, i, i + 1));
      // full cycle
      CMatrix cyc(n, n);
      for (std::size_t c = 0; c < n; ++c) cyc((c + 1) % n, c) = 1.0;
      out.push_back(cyc);
      break;
    }
  }
  return out;
}

}  // namespace commutant
