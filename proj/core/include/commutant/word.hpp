#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "commutant/matrix.hpp"
#include "commutant/rng.hpp"

namespace commutant {

enum class Group { Unitary, Orthogonal, Permutation };

std::string to_string(Group g);
Group group_from_string(std::string_view s);

struct VarInfo {
  Group group = Group::Unitary;
  std::size_t dim = 0;
};

struct WordFactor {
  std::string var;
  Modifier modifier = Modifier::Id;
};

// A tensor word: an ordered list of factors, each a variable with an optional
// entrywise-conjugate, transpose or conjugate-transpose modifier, plus the
// group and dimension of every variable. For real groups (orthogonal,
// permutation) conjugation is a no-op, so modifiers are normalized at
// construction: Conj -> Id and ConjTranspose -> Transpose.
class SymmetryWord {
 public:
  SymmetryWord() = default;
  SymmetryWord(std::vector<WordFactor> factors, std::map<std::string, VarInfo> vars,
               std::size_t dim_cap = kDefaultDimCap);

  const std::vector<WordFactor>& factors() const noexcept { return factors_; }
  const std::map<std::string, VarInfo>& vars() const noexcept { return vars_; }

  std::size_t total_dim() const noexcept { return total_dim_; }
  std::size_t factor_dim(std::size_t index) const;
  const VarInfo& var(const std::string& name) const;
  // Position of a variable in the sorted variable list; keys RNG substreams.
  std::size_t var_ordinal(const std::string& name) const;

  bool single_variable() const noexcept { return vars_.size() == 1; }
  // Canonical text form, e.g. "U,U^H".
  std::string text() const;

 private:
  std::vector<WordFactor> factors_;
  std::map<std::string, VarInfo> vars_;
  std::size_t total_dim_ = 0;
};

// Grammar: WORD := FACTOR ("," FACTOR)*, FACTOR := VAR SUFFIX?,
// SUFFIX := "*" | "^T" | "^H", VAR := [A-Za-z][A-Za-z0-9_]*.
// Whitespace is allowed between tokens. Every variable needs an entry in
// dims (DimMissing otherwise); group defaults to unitary. Entries in dims or
// groups that name no variable of the word are rejected.
SymmetryWord parse_word(std::string_view text,
                        const std::map<std::string, std::size_t>& dims,
                        const std::map<std::string, Group>& groups = {},
                        std::size_t dim_cap = kDefaultDimCap);

// One concrete matrix per variable.
struct GeneratorAssignment {
  std::map<std::string, CMatrix> matrices;
};

// Tensor product of the modified variable matrices, left to right.
CMatrix instantiate_word(const SymmetryWord& word, const GeneratorAssignment& assignment);

// Haar (or uniform, for permutation variables) sample of every variable on
// the substream (kind, variable ordinal, sample_index).
GeneratorAssignment sample_assignment(const SymmetryWord& word, std::uint64_t seed,
                                      std::uint64_t sample_index,
                                      StreamKind kind = StreamKind::Solve);

}  // namespace commutant
