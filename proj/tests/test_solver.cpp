#include "doctest.h"
#include "helpers.hpp"

#include <cmath>

#include "commutant/eig.hpp"
#include "commutant/generators.hpp"
#include "commutant/solver.hpp"
#include "commutant/twirl.hpp"

using namespace commutant;
using test_helpers::any_contains;
using test_helpers::span_residual;

namespace {

CommutantBasis solve_word(const SymmetryWord& word, std::uint64_t seed = 0) {
  SolveOptions opts;
  opts.seed = seed;
  return commutant_basis(word, opts);
}

SymmetryWord make_word(const std::string& text, std::map<std::string, std::size_t> dims,
                       std::map<std::string, Group> groups = {}) {
  return parse_word(text, dims, groups);
}

// The lone direction invariant under every rotation word and the axis/swap
// reflection words, but NOT under generic reflections: reflection by angle
// phi conjugates it by exp(4*i*phi), so only the full O(2) image kills it.
// Kept as a negative probe that the solver sees past a sub-battery.
CMatrix rotation_only_invariant() {
  CMatrix x = CMatrix::from_rows({{1.0, 0.0, 0.0, -1.0},
                                  {0.0, -1.0, -1.0, 0.0},
                                  {0.0, -1.0, -1.0, 0.0},
                                  {-1.0, 0.0, 0.0, 1.0}});
  x *= Complex(0.5, 0.0);
  return x;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("conjugation word commutant is the identity line") {
  for (std::size_t n : {2u, 3u}) {
    SymmetryWord word = make_word("U,U^H", {{"U", n}});
    CommutantBasis basis = solve_word(word);
    REQUIRE(basis.dim() == 1);
    CHECK(basis.gap >= 1e6);
    CHECK(basis.residual <= 1e-8);
    CHECK(basis.samples_used >= 6);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n * n));
    CHECK(distance(basis.basis[0], scale * CMatrix::identity(n * n)) < 1e-10);
  }
}

TEST_CASE("two independent variables leave only scalars") {
  SymmetryWord word = make_word("U,V", {{"U", 2}, {"V", 3}});
  CommutantBasis basis = solve_word(word);
  CHECK(basis.dim() == 1);
  CHECK(distance(basis.basis[0], (1.0 / std::sqrt(6.0)) * CMatrix::identity(6)) < 1e-10);
}

TEST_CASE("diagonal power word keeps identity and swap") {
  SymmetryWord word = make_word("U,U", {{"U", 2}});
  CommutantBasis basis = solve_word(word);
  REQUIRE(basis.dim() == 2);
  CHECK(span_residual(basis.basis, swap_operator(2)) < 1e-8);
  // HS-orthonormal presentation with the identity direction first
  CHECK(distance(basis.basis[0], 0.5 * CMatrix::identity(4)) < 1e-10);
  for (std::size_t i = 0; i < basis.dim(); ++i)
    for (std::size_t j = 0; j < basis.dim(); ++j) {
      const Complex want = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      CHECK(std::abs(hs_inner(basis.basis[i], basis.basis[j]) - want) < 1e-10);
    }
}

TEST_CASE("conjugate power word keeps identity and the pair projector") {
  SymmetryWord word = make_word("U,U*", {{"U", 2}});
  CommutantBasis basis = solve_word(word);
  REQUIRE(basis.dim() == 2);
  CHECK(span_residual(basis.basis, omega_projector(2)) < 1e-8);

  std::vector<std::string> pruned;
  OperatorLibrary lib = OperatorLibrary::for_word(word, &pruned);
  RecognitionReport rec = recognize_basis(basis, lib);
  CHECK(rec.verdict == RecognitionReport::Verdict::ExactSpan);
  for (const auto& e : rec.elements) CHECK(e.residual < 1e-8);
  CHECK(commutant_flags(basis, rec).empty());
}

TEST_CASE("three-factor conjugation word yields the two-dimensional ladder") {
  SymmetryWord word = make_word("U,U,U^H", {{"U", 2}});
  CommutantBasis basis = solve_word(word);
  REQUIRE(basis.dim() == 2);
  CMatrix fxi = kron(swap_operator(2), CMatrix::identity(2));
  CHECK(span_residual(basis.basis, fxi) < 1e-8);

  OperatorLibrary lib = OperatorLibrary::for_word(word, nullptr);
  RecognitionReport rec = recognize_basis(basis, lib);
  CHECK(rec.verdict == RecognitionReport::Verdict::ExactSpan);

  auto checks = verify_block_structure(basis);
  REQUIRE(checks.size() == 2);
  for (const auto& c : checks) CHECK(c.pass);
}

TEST_CASE("plain power words grow with the factor count") {
  SymmetryWord word3 = make_word("U,U,U", {{"U", 2}});
  CHECK(solve_word(word3).dim() == 5);
}

TEST_CASE("orthogonal two-factor word reduces to the two-parameter family") {
  SymmetryWord word = make_word("U,U^H", {{"U", 2}}, {{"U", Group::Orthogonal}});
  CHECK(word.text() == "U,U^T");
  CommutantBasis basis = solve_word(word);
  REQUIRE(basis.dim() == 2);
  CHECK(basis.gap >= 1e6);
  CHECK(span_residual(basis.basis, m_tensor_m()) < 1e-8);

  // the rotation-only invariant must be rejected: the word map is not
  // multiplicative, so every reflection angle is an independent constraint
  CHECK(span_residual(basis.basis, rotation_only_invariant()) > 0.9);
  CHECK(check_invariance(rotation_only_invariant(), word) > 1.0);

  OperatorLibrary lib = OperatorLibrary::for_word(word, nullptr);
  RecognitionReport rec = recognize_basis(basis, lib);
  CHECK(rec.verdict == RecognitionReport::Verdict::ExactSpan);
  CHECK(commutant_flags(basis, rec).empty());
}

TEST_CASE("a hypothetical oversized orthogonal commutant raises both flags") {
  SymmetryWord word = make_word("U,U^H", {{"U", 2}}, {{"U", Group::Orthogonal}});
  CommutantBasis fake;
  fake.word = word;
  fake.basis.push_back(0.5 * CMatrix::identity(4));
  fake.basis.push_back(0.5 * m_tensor_m());
  fake.basis.push_back((1.0 / std::sqrt(2.0)) * rotation_only_invariant());

  OperatorLibrary lib = OperatorLibrary::for_word(word, nullptr);
  RecognitionReport rec = recognize_basis(fake, lib);
  CHECK(rec.verdict == RecognitionReport::Verdict::Partial);
  auto flags = commutant_flags(fake, rec);
  CHECK(any_contains(flags, "exceeds the two-parameter family"));
  CHECK(any_contains(flags, "outside the operator library span"));
}

TEST_CASE("solver agrees with the generic nullspace route") {
  SymmetryWord word = make_word("U,U*", {{"U", 2}});
  CommutantBasis basis = solve_word(word);

  // same generators, explicit Kronecker constraint rows
  std::vector<CMatrix> constraints;
  const CMatrix eye = CMatrix::identity(4);
  const auto add_constraint = [&](const CMatrix& g) {
    constraints.push_back(kron(eye, g) - kron(transpose(g), eye));
  };
  for (const auto& m : structured_symmetry_set(Group::Unitary, 2)) {
    GeneratorAssignment a;
    a.matrices.emplace("U", m);
    add_constraint(instantiate_word(word, a));
  }
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(basis.samples_used); ++s) {
    add_constraint(instantiate_word(word, sample_assignment(word, 0, s)));
  }
  KernelBasis kernel = joint_nullspace(constraints);
  REQUIRE(kernel.dim() == basis.dim());

  std::vector<CMatrix> generic;
  for (std::size_t k = 0; k < kernel.dim(); ++k) {
    std::vector<Complex> v(16);
    for (std::size_t i = 0; i < 16; ++i) v[i] = kernel.vectors(i, k);
    generic.push_back(unvec(v, 4, 4));
  }
  for (const auto& b : basis.basis) CHECK(span_residual(generic, b) < 1e-8);
  for (const auto& g : generic) CHECK(span_residual(basis.basis, g) < 1e-8);
}

TEST_CASE("solves are reproducible and seed sensitive in the sampled generators") {
  SymmetryWord word = make_word("U,U^H", {{"U", 2}});
  CommutantBasis a = solve_word(word, 1);
  CommutantBasis b = solve_word(word, 1);
  REQUIRE(a.dim() == b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) CHECK(distance(a.basis[i], b.basis[i]) == 0.0);
  CommutantBasis c = solve_word(word, 2);
  CHECK(a.dim() == c.dim());  // the commutant itself is seed independent
}

TEST_CASE("solver option validation") {
  SymmetryWord word = make_word("U,U^H", {{"U", 2}});
  SolveOptions bad;
  bad.n_samples = 1;
  CHECK_THROWS_AS(commutant_basis(word, bad), BadParams);
  bad = {};
  bad.max_samples = 2;
  CHECK_THROWS_AS(commutant_basis(word, bad), BadParams);
  bad = {};
  bad.gram_dim_cap = 8;
  CHECK_THROWS_AS(commutant_basis(word, bad), SizeOverflow);
}

TEST_CASE("invariance measurement separates members from non-members") {
  SymmetryWord pow2 = make_word("U,U", {{"U", 2}});
  CHECK(check_invariance(swap_operator(2), pow2) < 1e-12);
  SymmetryWord conj2 = make_word("U,U^H", {{"U", 2}});
  CHECK(check_invariance(swap_operator(2), conj2) > 0.1);
  CHECK_THROWS_AS(check_invariance(CMatrix::identity(3), conj2), DimensionMismatch);
  CHECK_THROWS_AS(check_invariance(CMatrix::identity(4), conj2, 0), BadParams);
}

TEST_CASE("recognition rejects a dependent library by name") {
  SymmetryWord word = make_word("U,U^H", {{"U", 2}});
  CommutantBasis basis = solve_word(word);
  OperatorLibrary lib;
  lib.add("I", CMatrix::identity(4));
  lib.add("F", swap_operator(2));
  lib.add("Omega", omega_projector(2));
  lib.add("M⊗M", m_tensor_m());  // equals Omega - F
  try {
    recognize_basis(basis, lib);
    FAIL("expected SingularGram");
  } catch (const SingularGram& e) {
    const std::string what = e.what();
    CHECK(what.find("M⊗M") != std::string::npos);
  }
}

TEST_CASE("recognition coefficient values on the conjugation word") {
  SymmetryWord word = make_word("U,U^H", {{"U", 3}});
  CommutantBasis basis = solve_word(word);
  OperatorLibrary lib = OperatorLibrary::for_word(word, nullptr);
  RecognitionReport rec = recognize_basis(basis, lib);
  REQUIRE(rec.elements.size() == 1);
  REQUIRE(rec.elements[0].coefficients.size() == 3);
  // element is I/3, so the I coefficient is 1/3 and the rest vanish
  CHECK(rec.elements[0].coefficients[0].first == "I");
  CHECK(std::abs(rec.elements[0].coefficients[0].second - Complex(1.0 / 3.0, 0.0)) < 1e-10);
  CHECK(std::abs(rec.elements[0].coefficients[1].second) < 1e-10);
  CHECK(std::abs(rec.elements[0].coefficients[2].second) < 1e-10);
}

TEST_CASE("block partition shapes and validation") {
  CMatrix w = CMatrix::identity(6);
  auto grid = block_partition(w, 3);
  REQUIRE(grid.size() == 3);
  REQUIRE(grid[0].size() == 3);
  CHECK(grid[0][0].rows() == 2);
  CHECK(distance(grid[1][1], CMatrix::identity(2)) == 0.0);
  CHECK(frobenius_norm(grid[0][1]) == 0.0);
  CHECK_THROWS_AS(block_partition(w, 4), BadParams);
  CHECK_THROWS_AS(block_partition(CMatrix(2, 3), 1), DimensionMismatch);
}

TEST_CASE("two-factor block test accepts scalars and reports deviants") {
  SymmetryWord word = make_word("U,U^H", {{"U", 3}});
  BlockCheck good = verify_block_element(CMatrix::identity(9), word);
  CHECK(good.pass);
  CHECK(std::abs(good.x - Complex(1.0, 0.0)) < 1e-12);

  BlockCheck bad = verify_block_element(swap_operator(3), word);
  CHECK_FALSE(bad.pass);
  CHECK(!bad.violations.empty());
  bool saw_offdiag = false;
  for (const auto& v : bad.violations) {
    if (v.what.find("off-diagonal") != std::string::npos) saw_offdiag = true;
  }
  CHECK(saw_offdiag);
}

TEST_CASE("three-factor block test fits the ladder coefficients") {
  SymmetryWord word = make_word("U,U,U^H", {{"U", 2}});
  CMatrix w = CMatrix::identity(8);
  CMatrix fxi = kron(swap_operator(2), CMatrix::identity(2));
  fxi *= Complex(0.5, 0.0);
  w += fxi;
  BlockCheck check = verify_block_element(w, word);
  CHECK(check.pass);
  CHECK(std::abs(check.x - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(check.y - Complex(0.5, 0.0)) < 1e-12);

  // swapping the outer factors is invariant under U,U,U but not of the ladder form
  BlockCheck bad = verify_block_element(permutation_operator({2, 1, 0}, 2), word);
  CHECK_FALSE(bad.pass);
  CHECK(!bad.violations.empty());
}

TEST_CASE("block test rejects words outside the two conjugation shapes") {
  SymmetryWord pow2 = make_word("U,U", {{"U", 2}});
  CHECK_THROWS_AS(verify_block_element(CMatrix::identity(4), pow2), BadParams);
  SymmetryWord orth = make_word("U,U^H", {{"U", 2}}, {{"U", Group::Orthogonal}});
  CHECK_THROWS_AS(verify_block_element(CMatrix::identity(4), orth), BadParams);
  SymmetryWord conj3 = make_word("U,U,U^H", {{"U", 2}});
  CHECK_THROWS_AS(verify_block_element(CMatrix::identity(4), conj3), DimensionMismatch);
}

TEST_CASE("structure verification throws on a planted violation") {
  SymmetryWord word = make_word("U,U^H", {{"U", 2}});
  CommutantBasis basis = solve_word(word);
  CHECK(verify_block_structure(basis).size() == basis.dim());

  CommutantBasis tampered = basis;
  tampered.basis[0] = swap_operator(2);  // not of the scalar-block form
  CHECK_THROWS_AS(verify_block_structure(tampered), StructureViolation);
}

}  // TEST_SUITE
