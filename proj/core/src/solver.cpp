#include "commutant/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "commutant/generators.hpp"

namespace commutant {

namespace {

// Adds A^H A to gram for the commutator constraint A = I(x)g - g^T(x)I on
// vec(W) (column stacking). Expanding,
//   A^H A = I(x)(g^H g) + (conj(g) g^T)(x)I - g^T(x)g^H - conj(g)(x)g,
// and the last two terms are adjoint to each other. The two Kronecker-sparse
// terms go in with strided block adds, the dense pair entrywise; nothing here
// forms a D^2 x D^2 product.
void accumulate_constraint(CMatrix& gram, const CMatrix& g) {
  const std::size_t d = g.rows();
  const std::size_t dd = d * d;
  if (gram.rows() != dd) throw DimensionMismatch("accumulate_constraint: Gram size");

  const CMatrix gtg = matmul(adjoint(g), g);
  const CMatrix ggt = matmul(conjugate(g), transpose(g));

  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      Complex* row = gram.data() + (a * d + i) * dd;
      // I (x) (g^H g) on the diagonal block (a, a)
      const Complex* gtg_row = gtg.data() + i * d;
      for (std::size_t j = 0; j < d; ++j) row[a * d + j] += gtg_row[j];
      // (conj(g) g^T) (x) I across blocks, entry (i, i) of block (a, b)
      const Complex* ggt_row = ggt.data() + a * d;
      for (std::size_t b = 0; b < d; ++b) row[b * d + i] += ggt_row[b];
    }
  }

  // dense pair: gram(a d + i, b d + j) -= g(b,a) conj(g(j,i)) + conj(g(a,b)) g(i,j)
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      Complex* row = gram.data() + (a * d + i) * dd;
      for (std::size_t b = 0; b < d; ++b) {
        const Complex gba = g(b, a);
        const Complex gab_c = std::conj(g(a, b));
        const Complex* g_i = g.data() + i * d;    // g(i, :)
        for (std::size_t j = 0; j < d; ++j) {
          row[b * d + j] -= gba * std::conj(g(j, i)) + gab_c * g_i[j];
        }
      }
    }
  }
}

std::vector<CMatrix> structured_for_word(const SymmetryWord& word) {
  if (!word.single_variable()) return {};
  const auto& [name, info] = *word.vars().begin();
  (void)name;
  return structured_symmetry_set(info.group, info.dim);
}

CMatrix instantiate_single(const SymmetryWord& word, const CMatrix& m) {
  GeneratorAssignment a;
  a.matrices.emplace(word.vars().begin()->first, m);
  return instantiate_word(word, a);
}

std::vector<CMatrix> kernel_to_matrices(const KernelBasis& kernel, std::size_t d) {
  std::vector<CMatrix> out;
  out.reserve(kernel.dim());
  for (std::size_t k = 0; k < kernel.dim(); ++k) {
    std::vector<Complex> v(d * d);
    for (std::size_t i = 0; i < d * d; ++i) v[i] = kernel.vectors(i, k);
    out.push_back(unvec(v, d, d));
  }
  return out;
}

// Deterministic presentation: rotate the span so the identity direction
// comes first, Gram-Schmidt the rest in eigen-order, then fix each element's
// global phase by its largest entry.
std::vector<CMatrix> present_basis(std::vector<CMatrix> raw, std::size_t d) {
  if (raw.empty()) return raw;

  std::vector<CMatrix> ordered;
  const CMatrix eye = CMatrix::identity(d);
  CMatrix proj(d, d);
  for (const auto& b : raw) {
    CMatrix scaled = b;
    scaled *= hs_inner(b, eye);
    proj += scaled;
  }
  const double proj_norm = frobenius_norm(proj);
  if (proj_norm > 1e-8) {
    proj *= Complex(1.0 / proj_norm, 0.0);
    ordered.push_back(std::move(proj));
  }

  for (auto& b : raw) {
    CMatrix r = std::move(b);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : ordered) {
        CMatrix scaled = q;
        scaled *= hs_inner(q, r);
        r -= scaled;
      }
    }
    const double norm = frobenius_norm(r);
    // exactly one raw vector is absorbed by the identity rotation
    if (norm < 0.3) continue;
    r *= Complex(1.0 / norm, 0.0);
    ordered.push_back(std::move(r));
  }

  for (auto& b : ordered) {
    std::size_t arg_max = 0;
    double best = -1.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      const double mag = std::abs(b.entries()[k]);
      if (mag > best) {
        best = mag;
        arg_max = k;
      }
    }
    if (best > 1e-12) {
      const Complex e = b.entries()[arg_max];
      b *= std::conj(e) / std::abs(e);
    }
  }
  return ordered;
}

double worst_conjugation_residual(const CMatrix& g, const std::vector<CMatrix>& basis) {
  double worst = 0.0;
  const CMatrix gh = adjoint(g);
  for (const auto& b : basis) {
    const CMatrix moved = matmul(matmul(g, b), gh);
    worst = std::max(worst, distance(moved, b));
  }
  return worst;
}

}  // namespace

CommutantBasis commutant_basis(const SymmetryWord& word, const SolveOptions& opts) {
  if (opts.n_samples < 2) throw BadParams("commutant_basis: need at least 2 samples");
  if (opts.max_samples < opts.n_samples) {
    throw BadParams("commutant_basis: max_samples below n_samples");
  }
  const std::size_t d = word.total_dim();
  if (d > opts.gram_dim_cap / d) {
    throw SizeOverflow("commutant_basis: Gram dimension " + std::to_string(d) + "^2 exceeds cap " +
                       std::to_string(opts.gram_dim_cap));
  }

  CMatrix gram(d * d, d * d);
  const std::vector<CMatrix> structured =
      opts.append_structured ? structured_for_word(word) : std::vector<CMatrix>{};
  for (const auto& m : structured) accumulate_constraint(gram, instantiate_single(word, m));

  int drawn = 0;
  const auto draw_samples = [&](int upto) {
    for (; drawn < upto; ++drawn) {
      accumulate_constraint(
          gram, instantiate_word(word, sample_assignment(word, opts.seed,
                                                         static_cast<std::uint64_t>(drawn),
                                                         StreamKind::Solve)));
    }
  };

  const auto extract = [&]() -> std::optional<KernelBasis> {
    try {
      return joint_nullspace_gram(gram, opts.rank);
    } catch (const AmbiguousRank&) {
      return std::nullopt;
    }
  };

  int k = opts.n_samples;
  draw_samples(k);
  std::optional<KernelBasis> prev = extract();

  KernelBasis accepted;
  int used = 0;
  for (;;) {
    draw_samples(k + 2);
    std::optional<KernelBasis> cur = extract();
    if (prev && cur && prev->dim() == cur->dim()) {
      accepted = std::move(*cur);
      used = k + 2;
      break;
    }
    if (k >= opts.max_samples) {
      if (!cur) {
        // let the ambiguity surface with its own diagnostics
        joint_nullspace_gram(gram, opts.rank);
      }
      const std::string from = prev ? std::to_string(prev->dim()) : "ambiguous";
      throw UnstableDimension("commutant_basis: kernel dimension still moving (" + from +
                              " -> " + std::to_string(cur->dim()) + ") at " +
                              std::to_string(k + 2) + " samples for word " + word.text());
    }
    prev = std::move(cur);
    k += 2;
  }

  CommutantBasis out;
  out.word = word;
  out.gap = accepted.gap;
  out.samples_used = used;
  out.seed = opts.seed;
  out.basis = present_basis(kernel_to_matrices(accepted, d), d);
  if (out.basis.size() != accepted.dim()) {
    throw VerificationFailure("commutant_basis: presentation changed the dimension for word " +
                              word.text());
  }

  double worst = 0.0;
  for (int t = 0; t < opts.verify_samples; ++t) {
    const CMatrix g = instantiate_word(
        word, sample_assignment(word, opts.seed, static_cast<std::uint64_t>(t),
                                StreamKind::Verify));
    worst = std::max(worst, worst_conjugation_residual(g, out.basis));
  }
  for (const auto& m : structured) {
    worst = std::max(worst, worst_conjugation_residual(instantiate_single(word, m), out.basis));
  }
  out.residual = worst;
  if (worst > opts.verify_tol) {
    throw VerificationFailure("commutant_basis: invariance re-check residual " +
                              std::to_string(worst) + " exceeds " +
                              std::to_string(opts.verify_tol) + " for word " + word.text());
  }
  return out;
}

double check_invariance(const CMatrix& w, const SymmetryWord& word, int trials,
                        std::uint64_t seed) {
  const std::size_t d = word.total_dim();
  if (w.rows() != d || w.cols() != d) {
    throw DimensionMismatch("check_invariance: matrix is " + std::to_string(w.rows()) + "x" +
                            std::to_string(w.cols()) + ", word acts on dimension " +
                            std::to_string(d));
  }
  if (trials < 1) throw BadParams("check_invariance: trials must be positive");
  const std::vector<CMatrix> single{w};
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const CMatrix g = instantiate_word(
        word, sample_assignment(word, seed, static_cast<std::uint64_t>(t), StreamKind::Check));
    worst = std::max(worst, worst_conjugation_residual(g, single));
  }
  for (const auto& m : structured_for_word(word)) {
    worst = std::max(worst, worst_conjugation_residual(instantiate_single(word, m), single));
  }
  return worst;
}

std::string to_string(RecognitionReport::Verdict v) {
  switch (v) {
    case RecognitionReport::Verdict::ExactSpan:
      return "exact-span";
    case RecognitionReport::Verdict::Partial:
      return "partial";
    case RecognitionReport::Verdict::Unrecognized:
      return "unrecognized";
  }
  return "unrecognized";
}

RecognitionReport recognize_basis(const CommutantBasis& basis, const OperatorLibrary& lib,
                                  double fit_tol) {
  if (lib.size() == 0) throw BadParams("recognize_basis: empty library");
  if (lib.dim() != basis.total_dim()) {
    throw DimensionMismatch("recognize_basis: library dimension " + std::to_string(lib.dim()) +
                            " vs word dimension " + std::to_string(basis.total_dim()));
  }
  const std::size_t k = lib.size();
  CMatrix gram(k, k);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      gram(p, q) = hs_inner(lib.entries()[p].op, lib.entries()[q].op);

  const Spectrum spec = hermitian_eig(gram);
  const double lambda_max = spec.values.back();
  if (spec.values.front() <= 1e-12 * lambda_max) {
    // name the entries loading on the degenerate direction
    std::string suspects;
    double biggest = 0.0;
    for (std::size_t p = 0; p < k; ++p) biggest = std::max(biggest, std::abs(spec.vectors(p, 0)));
    for (std::size_t p = 0; p < k; ++p) {
      if (std::abs(spec.vectors(p, 0)) > 0.3 * biggest) {
        if (!suspects.empty()) suspects += ", ";
        suspects += lib.entries()[p].name;
      }
    }
    throw SingularGram("recognize_basis: library is numerically dependent (" + suspects + ")");
  }

  RecognitionReport report;
  report.fit_tol = fit_tol;
  std::size_t recognized = 0;
  for (const auto& b : basis.basis) {
    std::vector<Complex> rhs(k);
    for (std::size_t p = 0; p < k; ++p) rhs[p] = hs_inner(lib.entries()[p].op, b);
    // solve gram * c = rhs through the spectral inverse
    std::vector<Complex> c(k, Complex(0.0, 0.0));
    for (std::size_t m = 0; m < k; ++m) {
      Complex vr(0.0, 0.0);
      for (std::size_t p = 0; p < k; ++p) vr += std::conj(spec.vectors(p, m)) * rhs[p];
      vr /= spec.values[m];
      for (std::size_t p = 0; p < k; ++p) c[p] += spec.vectors(p, m) * vr;
    }
    CMatrix fit(lib.dim(), lib.dim());
    for (std::size_t p = 0; p < k; ++p) {
      CMatrix scaled = lib.entries()[p].op;
      scaled *= c[p];
      fit += scaled;
    }
    RecognitionReport::ElementFit ef;
    ef.residual = distance(b, fit);
    ef.recognized = ef.residual < fit_tol;
    for (std::size_t p = 0; p < k; ++p) ef.coefficients.emplace_back(lib.entries()[p].name, c[p]);
    if (ef.recognized) ++recognized;
    report.elements.push_back(std::move(ef));
  }
  if (recognized == report.elements.size() && !report.elements.empty()) {
    report.verdict = RecognitionReport::Verdict::ExactSpan;
  } else if (recognized > 0) {
    report.verdict = RecognitionReport::Verdict::Partial;
  } else {
    report.verdict = RecognitionReport::Verdict::Unrecognized;
  }
  return report;
}

std::vector<std::vector<CMatrix>> block_partition(const CMatrix& w, std::size_t outer) {
  if (!w.is_square()) throw DimensionMismatch("block_partition: matrix not square");
  if (outer == 0 || w.rows() % outer != 0) {
    throw BadParams("block_partition: " + std::to_string(outer) + " does not divide " +
                    std::to_string(w.rows()));
  }
  const std::size_t s = w.rows() / outer;
  std::vector<std::vector<CMatrix>> grid(outer, std::vector<CMatrix>(outer));
  for (std::size_t bi = 0; bi < outer; ++bi) {
    for (std::size_t bj = 0; bj < outer; ++bj) {
      CMatrix block(s, s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) block(i, j) = w(bi * s + i, bj * s + j);
      grid[bi][bj] = std::move(block);
    }
  }
  return grid;
}

namespace {

enum class ConjShape { TwoFactor, ThreeFactor };

ConjShape conjugation_shape(const SymmetryWord& word) {
  const auto& f = word.factors();
  bool same_var = true;
  for (const auto& fac : f) {
    if (fac.var != f.front().var) same_var = false;
  }
  const bool unitary = word.single_variable() &&
                       word.vars().begin()->second.group == Group::Unitary;
  if (same_var && unitary && f.size() == 2 && f[0].modifier == Modifier::Id &&
      f[1].modifier == Modifier::ConjTranspose) {
    return ConjShape::TwoFactor;
  }
  if (same_var && unitary && f.size() == 3 && f[0].modifier == Modifier::Id &&
      f[1].modifier == Modifier::Id && f[2].modifier == Modifier::ConjTranspose) {
    return ConjShape::ThreeFactor;
  }
  throw BadParams("verify_block_element: word " + word.text() +
                  " is not of the V,V^H or V,V,V^H shape");
}

double scalar_block_defect(const CMatrix& block, Complex scalar) {
  double acc = 0.0;
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) {
      const Complex want = i == j ? scalar : Complex(0.0, 0.0);
      acc += std::norm(block(i, j) - want);
    }
  return std::sqrt(acc);
}

}  // namespace

BlockCheck verify_block_element(const CMatrix& w, const SymmetryWord& word, double tol) {
  const ConjShape shape = conjugation_shape(word);
  const std::size_t n = word.factor_dim(0);
  const std::size_t d = word.total_dim();
  if (w.rows() != d || w.cols() != d) {
    throw DimensionMismatch("verify_block_element: matrix is " + std::to_string(w.rows()) +
                            "x" + std::to_string(w.cols()) + ", expected " + std::to_string(d));
  }

  BlockCheck check;
  if (shape == ConjShape::TwoFactor) {
    const auto grid = block_partition(w, n);
    // mean of the diagonal-block scalars is the fitted x
    Complex x(0.0, 0.0);
    for (std::size_t a = 0; a < n; ++a) x += trace(grid[a][a]);
    x /= static_cast<double>(d);
    check.x = x;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Complex want = a == b ? x : Complex(0.0, 0.0);
        const double defect = scalar_block_defect(grid[a][b], want);
        if (defect > tol) {
          check.pass = false;
          check.violations.push_back({a + 1, b + 1, 0, 0, defect,
                                      a == b ? "diagonal block deviates from the common scalar"
                                             : "off-diagonal block is nonzero"});
        }
      }
    }
    return check;
  }

  // three factors: w should match x I + y F(x)I, whose outer block (A,B)
  // holds y I_n in sub-block (B,A) plus x I_n on the sub-diagonal when A = B
  if (n < 2) throw BadParams("verify_block_element: three-factor check needs n >= 2");
  const auto outer = block_partition(w, n);
  const auto w11 = block_partition(outer[0][0], n);
  const auto w12 = block_partition(outer[0][1], n);
  const Complex x = trace(w11[1][1]) / static_cast<double>(n);
  const Complex y = trace(w12[1][0]) / static_cast<double>(n);
  check.x = x;
  check.y = y;

  for (std::size_t A = 0; A < n; ++A) {
    for (std::size_t B = 0; B < n; ++B) {
      const auto sub = block_partition(outer[A][B], n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          Complex want(0.0, 0.0);
          if (A == B && a == b) want += x;
          if (a == B && b == A) want += y;
          const double defect = scalar_block_defect(sub[a][b], want);
          if (defect > tol) {
            check.pass = false;
            check.violations.push_back({A + 1, B + 1, a + 1, b + 1, defect,
                                        "sub-block deviates from the x/y ladder"});
          }
        }
      }
    }
  }
  return check;
}

std::vector<BlockCheck> verify_block_structure(const CommutantBasis& basis, double tol) {
  std::vector<BlockCheck> checks;
  checks.reserve(basis.basis.size());
  std::string failure;
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    checks.push_back(verify_block_element(basis.basis[i], basis.word, tol));
    if (!checks.back().pass && failure.empty()) {
      const auto& v = checks.back().violations.front();
      failure = "element " + std::to_string(i) + ": " + v.what + " at block (" +
                std::to_string(v.outer_i) + "," + std::to_string(v.outer_j) + "), magnitude " +
                std::to_string(v.magnitude);
    }
  }
  if (!failure.empty()) {
    throw StructureViolation("verify_block_structure: " + failure + " for word " +
                             basis.word.text());
  }
  return checks;
}

std::vector<std::string> commutant_flags(const CommutantBasis& basis,
                                         const RecognitionReport& recognition) {
  std::vector<std::string> flags;
  const auto& f = basis.word.factors();
  if (basis.word.single_variable() && f.size() == 2 &&
      basis.word.vars().begin()->second.group == Group::Orthogonal && basis.dim() > 2) {
    flags.push_back("orthogonal two-factor word: commutant dimension " +
                    std::to_string(basis.dim()) +
                    " exceeds the two-parameter family x I + y M⊗M");
  }
  for (std::size_t i = 0; i < recognition.elements.size(); ++i) {
    if (!recognition.elements[i].recognized) {
      flags.push_back("basis element " + std::to_string(i) +
                      " lies outside the operator library span (fit residual " +
                      std::to_string(recognition.elements[i].residual) + ")");
    }
  }
  return flags;
}

}  // namespace commutant
