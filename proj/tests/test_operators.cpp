#include "doctest.h"
#include "helpers.hpp"

#include <cmath>
#include <limits>

#include "commutant/eig.hpp"
#include "commutant/operators.hpp"

using namespace commutant;
using test_helpers::any_contains;

TEST_SUITE("operators") {

TEST_CASE("swap operator entries and involution") {
  CMatrix f = swap_operator(2);
  CMatrix expected = CMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                         {0.0, 0.0, 1.0, 0.0},
                                         {0.0, 1.0, 0.0, 0.0},
                                         {0.0, 0.0, 0.0, 1.0}});
  CHECK(distance(f, expected) == 0.0);
  for (std::size_t n : {2u, 3u, 4u}) {
    CMatrix fn = swap_operator(n);
    CHECK(distance(matmul(fn, fn), CMatrix::identity(n * n)) == 0.0);
    CHECK(std::abs(trace(fn) - Complex(static_cast<double>(n), 0.0)) < 1e-15);
  }
  CHECK_THROWS_AS(swap_operator(0), BadParams);
  CHECK_THROWS_AS(swap_operator(70, 4096), SizeOverflow);
}

TEST_CASE("omega projector entries and scaling") {
  CMatrix om = omega_projector(2);
  CHECK(om(0, 0) == Complex(1.0, 0.0));
  CHECK(om(0, 3) == Complex(1.0, 0.0));
  CHECK(om(3, 0) == Complex(1.0, 0.0));
  CHECK(om(3, 3) == Complex(1.0, 0.0));
  CHECK(om(1, 1) == Complex(0.0, 0.0));
  // Omega^2 = n Omega, trace n
  for (std::size_t n : {2u, 3u}) {
    CMatrix w = omega_projector(n);
    CMatrix w2 = matmul(w, w);
    CMatrix scaled = w;
    scaled *= Complex(static_cast<double>(n), 0.0);
    CHECK(distance(w2, scaled) < 1e-14);
    CHECK(std::abs(trace(w) - Complex(static_cast<double>(n), 0.0)) < 1e-15);
  }
}

TEST_CASE("M tensor M equals Omega minus F at n = 2") {
  CMatrix mm = m_tensor_m();
  CMatrix expected = CMatrix::from_rows({{0.0, 0.0, 0.0, 1.0},
                                         {0.0, 0.0, -1.0, 0.0},
                                         {0.0, -1.0, 0.0, 0.0},
                                         {1.0, 0.0, 0.0, 0.0}});
  CHECK(distance(mm, expected) == 0.0);
  CHECK(distance(mm, omega_projector(2) - swap_operator(2)) == 0.0);
}

TEST_CASE("factor permutation operators compose as permutations") {
  for (std::size_t n : {2u, 3u}) {
    CHECK(distance(permutation_operator({1, 0}, n), swap_operator(n)) == 0.0);
  }
  // homomorphism on three factors
  std::vector<std::size_t> sigma{1, 2, 0};
  std::vector<std::size_t> tau{1, 0, 2};
  std::vector<std::size_t> comp(3);
  for (std::size_t t = 0; t < 3; ++t) comp[t] = sigma[tau[t]];
  CMatrix lhs = matmul(permutation_operator(sigma, 2), permutation_operator(tau, 2));
  CHECK(distance(lhs, permutation_operator(comp, 2)) == 0.0);

  CHECK_THROWS_AS(permutation_operator({0, 0}, 2), BadParams);
  CHECK_THROWS_AS(permutation_operator({0, 1, 2, 3, 4}, 2), BadParams);
  CHECK_THROWS_AS(permutation_operator({1, 0}, 70), SizeOverflow);
}

TEST_CASE("cycle notation parses and prints canonically") {
  CHECK(permutation_from_cycles("(12)", 2) == std::vector<std::size_t>{1, 0});
  CHECK(permutation_from_cycles("(123)", 3) == std::vector<std::size_t>{1, 2, 0});
  CHECK(permutation_from_cycles("(12)(34)", 4) == std::vector<std::size_t>{1, 0, 3, 2});
  CHECK(permutation_from_cycles("", 3) == std::vector<std::size_t>{0, 1, 2});
  CHECK(permutation_from_cycles("(1 3 2)", 3) == std::vector<std::size_t>{2, 0, 1});

  CHECK_THROWS_AS(permutation_from_cycles("(15)", 4), ParseError);
  CHECK_THROWS_AS(permutation_from_cycles("(11)", 2), ParseError);
  CHECK_THROWS_AS(permutation_from_cycles("(12", 2), ParseError);
  CHECK_THROWS_AS(permutation_from_cycles("12)", 2), ParseError);

  CHECK(cycle_string({1, 0}) == "(12)");
  CHECK(cycle_string({0, 1, 2}) == "()");
  CHECK(cycle_string(permutation_from_cycles("(123)", 3)) == "(123)");
  CHECK(cycle_string({1, 0, 3, 2}) == "(12)(34)");
}

TEST_CASE("direction operators resolve names and aliases") {
  CHECK(distance(direction_operator("I", 3), CMatrix::identity(3)) == 0.0);
  CHECK(distance(direction_operator("F", 2), swap_operator(2)) == 0.0);
  CHECK(distance(direction_operator("Omega", 3), omega_projector(3)) == 0.0);
  CHECK(distance(direction_operator("MxM", 2), m_tensor_m()) == 0.0);
  CHECK(direction_operator("FxI", 2).rows() == 8);
  CHECK(distance(direction_operator("FxI", 3),
                 kron(swap_operator(3), CMatrix::identity(3))) == 0.0);
  CHECK_THROWS_AS(direction_operator("MxM", 3), BadParams);
  CHECK_THROWS_AS(direction_operator("G", 2), UnknownOperator);
}

TEST_CASE("family matrices are x I + y B") {
  FamilySpec spec;
  spec.direction = "F";
  spec.x = 1.0;
  spec.y = 1.0;
  CMatrix fam = family_matrix(spec, 2);
  CHECK(distance(fam, CMatrix::identity(4) + swap_operator(2)) == 0.0);
  Spectrum s = hermitian_eig(fam);
  CHECK(s.values.front() == doctest::Approx(0.0));
  CHECK(s.values.back() == doctest::Approx(2.0));

  spec.y = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(family_matrix(spec, 2), BadParams);
}

TEST_CASE("psd region of the swap direction is the absolute-value cone") {
  PsdRegion region = psd_region("F", 2);
  REQUIRE(region.eigenvalues.size() == 2);
  CHECK(region.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(region.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(region.abs_cone);
  REQUIRE(region.inequalities.size() == 2);
  CHECK(region.inequalities[0] == "x - y >= 0");
  CHECK(region.inequalities[1] == "x + y >= 0");
  CHECK(region.direction_name.value() == "F");

  CHECK(region.contains(1.0, 0.5));
  CHECK(region.contains(1.0, -1.0));
  CHECK_FALSE(region.contains(1.0, 1.5));
  CHECK_FALSE(region.contains(-0.1, 0.0));
  CHECK(region.min_eigenvalue(2.0, 1.0) == doctest::Approx(1.0));

  // boundary points actually sit on the PSD boundary
  for (auto [x, y] : region.boundary_points) {
    FamilySpec spec;
    spec.direction = "F";
    spec.x = x;
    spec.y = y;
    CHECK(std::abs(min_eigenvalue(family_matrix(spec, 2))) < 1e-9);
  }
}

TEST_CASE("psd region of the omega direction is asymmetric") {
  PsdRegion region = psd_region("Omega", 2);
  REQUIRE(region.eigenvalues.size() == 2);
  CHECK(region.eigenvalues[0] == doctest::Approx(0.0));
  CHECK(region.eigenvalues[1] == doctest::Approx(2.0));
  CHECK_FALSE(region.abs_cone);
  CHECK(region.inequalities[0] == "x >= 0");
  CHECK(region.inequalities[1] == "x + (2)*y >= 0");
  CHECK(region.contains(1.0, -0.4));
  CHECK_FALSE(region.contains(1.0, -0.6));
}

TEST_CASE("psd region merges repeated eigenvalues") {
  PsdRegion region = psd_region(CMatrix::identity(3));
  CHECK(region.eigenvalues.size() == 1);
  CHECK(region.inequalities.size() == 1);
  CHECK(region.inequalities[0] == "x + y >= 0");
  CHECK_FALSE(region.abs_cone);
}

TEST_CASE("psd region of a generic direction prints its eigenvalue") {
  CMatrix d = CMatrix::from_rows({{3.0, 0.0}, {0.0, -1.0}});
  PsdRegion region = psd_region(d);
  REQUIRE(region.inequalities.size() == 2);
  CHECK(region.inequalities[0] == "x - y >= 0");
  CHECK(region.inequalities[1] == "x + (3)*y >= 0");
}

TEST_CASE("state normalization") {
  CMatrix w = CMatrix::from_rows({{1.0, 0.0}, {0.0, 3.0}});
  CMatrix rho = normalize_state(w);
  CHECK(std::abs(rho(0, 0) - Complex(0.25, 0.0)) < 1e-15);
  CHECK(std::abs(rho(1, 1) - Complex(0.75, 0.0)) < 1e-15);

  CHECK_THROWS_AS(normalize_state(CMatrix::from_rows({{1.0, 0.0}, {0.0, -0.5}})), NotPsd);
  CHECK_THROWS_AS(normalize_state(CMatrix(2, 2)), ZeroTrace);
  CHECK_THROWS_AS(normalize_state(CMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})), NotHermitian);

  // Werner-style family member: trace of I + F at n = 2 is 6
  FamilySpec spec;
  spec.direction = "F";
  spec.x = 1.0;
  spec.y = 1.0;
  CMatrix fam = family_matrix(spec, 2);
  CHECK(trace(fam).real() == doctest::Approx(6.0));
  CMatrix rho2 = normalize_state(fam);
  CHECK(trace(rho2).real() == doctest::Approx(1.0));
  CHECK(std::abs(rho2(0, 0) - Complex(1.0 / 3.0, 0.0)) < 1e-14);
}

TEST_CASE("operator library add validates inputs") {
  OperatorLibrary lib;
  lib.add("I", CMatrix::identity(4));
  CHECK_THROWS_AS(lib.add("I", swap_operator(2)), BadParams);
  CHECK_THROWS_AS(lib.add("small", CMatrix::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(lib.add("", CMatrix::identity(4)), BadParams);
  CHECK(lib.size() == 1);
  CHECK(lib.dim() == 4);
  CHECK(lib.find("I") != nullptr);
  CHECK(lib.find("F") == nullptr);
}

TEST_CASE("word libraries carry the expected candidates") {
  std::vector<std::string> pruned;

  SymmetryWord conj2 = parse_word("U,U^H", {{"U", 3}});
  OperatorLibrary lib = OperatorLibrary::for_word(conj2, &pruned);
  REQUIRE(lib.size() == 3);
  CHECK(lib.entries()[0].name == "I");
  CHECK(lib.entries()[1].name == "F");
  CHECK(lib.entries()[2].name == "Omega");
  CHECK(pruned.empty());

  pruned.clear();
  SymmetryWord pow2 = parse_word("U,U", {{"U", 2}});
  lib = OperatorLibrary::for_word(pow2, &pruned);
  REQUIRE(lib.size() == 3);
  CHECK(lib.entries()[2].name == "Omega");
  REQUIRE(pruned.size() == 2);
  CHECK(any_contains(pruned, "M⊗M"));   // Omega - F, dependent
  CHECK(any_contains(pruned, "pi(12)"));  // equals F on two factors

  pruned.clear();
  SymmetryWord conj3 = parse_word("U,U,U^H", {{"U", 2}});
  lib = OperatorLibrary::for_word(conj3, &pruned);
  REQUIRE(lib.size() == 2);
  CHECK(lib.entries()[1].name == "F⊗I");
  CHECK(pruned.empty());

  pruned.clear();
  SymmetryWord pow3 = parse_word("U,U,U", {{"U", 2}});
  lib = OperatorLibrary::for_word(pow3, &pruned);
  CHECK(lib.size() == 5);  // the five independent factor permutations at n = 2
  CHECK(any_contains(pruned, "pi(12)"));

  pruned.clear();
  SymmetryWord pow3_big = parse_word("U,U,U", {{"U", 3}});
  lib = OperatorLibrary::for_word(pow3_big, &pruned);
  CHECK(lib.size() == 6);  // all of S_3 independent at n = 3

  pruned.clear();
  SymmetryWord two_vars = parse_word("U,V", {{"U", 2}, {"V", 2}});
  lib = OperatorLibrary::for_word(two_vars, &pruned);
  CHECK(lib.size() == 1);
  CHECK(lib.entries()[0].name == "I");
}

}  // TEST_SUITE
