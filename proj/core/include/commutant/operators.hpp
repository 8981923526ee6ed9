#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commutant/word.hpp"

namespace commutant {

// Swap F on C^n (x) C^n: F (u (x) v) = v (x) u.
CMatrix swap_operator(std::size_t n, std::size_t dim_cap = kDefaultDimCap);

// Unnormalized projector Omega = sum_{i,j} |ii><jj| (rank 1, trace n).
CMatrix omega_projector(std::size_t n, std::size_t dim_cap = kDefaultDimCap);

// M (x) M with M = [[0, 1], [-1, 0]]. Equals Omega - F at n = 2.
CMatrix m_tensor_m();

// Operator on (C^n)^(x)k permuting tensor factors: slot sigma[t] of the
// output carries input slot t. sigma is 0-based one-line notation, k <= 4.
CMatrix permutation_operator(const std::vector<std::size_t>& sigma, std::size_t n,
                             std::size_t dim_cap = kDefaultDimCap);

// Cycle notation over 1-based slots, e.g. "(12)" or "(1 2 3)(4)". k <= 4.
std::vector<std::size_t> permutation_from_cycles(std::string_view text, std::size_t k);
std::string cycle_string(const std::vector<std::size_t>& sigma);

// Named operator at local dimension n. Names: I (n x n), F, Omega (n^2),
// F(x)I (n^3), M(x)M (n = 2 only; ASCII aliases FxI, MxM accepted).
CMatrix direction_operator(std::string_view name, std::size_t n,
                           std::size_t dim_cap = kDefaultDimCap);

// x * I + y * direction, at the direction's ambient dimension.
struct FamilySpec {
  std::string direction = "F";
  double x = 1.0;
  double y = 0.0;
};

CMatrix family_matrix(const FamilySpec& spec, std::size_t n,
                      std::size_t dim_cap = kDefaultDimCap);

// PSD region of the pencil x * I + y * B in the (x, y) plane. Since I and B
// share an eigenbasis the pencil's eigenvalues are x + lambda * y over the
// eigenvalues lambda of B, so the region is the cone cut out by the
// inequalities x + lambda * y >= 0, one per distinct lambda.
struct PsdRegion {
  std::vector<double> eigenvalues;        // distinct, ascending
  std::vector<std::string> inequalities;  // one per distinct eigenvalue
  // true when the binding constraints are x + y >= 0 and x - y >= 0,
  // i.e. the region is exactly x >= |y|
  bool abs_cone = false;
  std::vector<std::pair<double, double>> boundary_points;
  std::optional<std::string> direction_name;

  double min_eigenvalue(double x, double y) const;
  bool contains(double x, double y, double tol = 1e-10) const;
};

PsdRegion psd_region(const CMatrix& direction, double herm_tol = 1e-10);
PsdRegion psd_region(std::string_view direction_name, std::size_t n,
                     std::size_t dim_cap = kDefaultDimCap);

// Scales a Hermitian PSD matrix to unit trace. NotPsd when the minimum
// eigenvalue is below -psd_tol, ZeroTrace when the trace cannot normalize.
CMatrix normalize_state(const CMatrix& w, double psd_tol = 1e-10);

// Named candidate set used to express computed commutant bases in closed
// form. Entries share one ambient dimension and keep insertion order.
class OperatorLibrary {
 public:
  struct Entry {
    std::string name;
    CMatrix op;
  };

  void add(std::string name, CMatrix op);
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const CMatrix* find(std::string_view name) const;
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t dim() const noexcept { return dim_; }

  // Standard candidates for a word: always I; F, Omega (and M(x)M at n = 2)
  // for two-factor single-variable words; F(x)I for three-factor ones;
  // factor permutations for unmodified powers up to four factors. Candidates
  // that are numerically dependent on earlier ones are dropped and reported
  // through pruned, e.g. M(x)M = Omega - F.
  static OperatorLibrary for_word(const SymmetryWord& word,
                                  std::vector<std::string>* pruned = nullptr);

 private:
  std::vector<Entry> entries_;
  std::size_t dim_ = 0;
};

}  // namespace commutant
