#include "commutant/word.hpp"

#include <cctype>

#include "commutant/haar.hpp"

namespace commutant {

std::string to_string(Group g) {
  switch (g) {
    case Group::Unitary:
      return "unitary";
    case Group::Orthogonal:
      return "orthogonal";
    case Group::Permutation:
      return "permutation";
  }
  return "unitary";
}

Group group_from_string(std::string_view s) {
  if (s == "unitary") return Group::Unitary;
  if (s == "orthogonal") return Group::Orthogonal;
  if (s == "permutation") return Group::Permutation;
  throw ValidationError("unknown group '" + std::string(s) +
                        "' (expected unitary, orthogonal or permutation)");
}

namespace {

Modifier normalize_modifier(Modifier m, Group g) {
  if (g == Group::Unitary) return m;
  // real matrix groups: conjugation does nothing
  if (m == Modifier::Conj) return Modifier::Id;
  if (m == Modifier::ConjTranspose) return Modifier::Transpose;
  return m;
}

std::string suffix_string(Modifier m) {
  switch (m) {
    case Modifier::Id:
      return "";
    case Modifier::Conj:
      return "*";
    case Modifier::Transpose:
      return "^T";
    case Modifier::ConjTranspose:
      return "^H";
  }
  return "";
}

}  // namespace

SymmetryWord::SymmetryWord(std::vector<WordFactor> factors,
                           std::map<std::string, VarInfo> vars, std::size_t dim_cap)
    : factors_(std::move(factors)), vars_(std::move(vars)) {
  if (factors_.empty()) throw ValidationError("word: at least one factor required");
  for (auto& [name, info] : vars_) {
    if (info.dim == 0) {
      throw ValidationError("word: variable '" + name + "' has dimension 0");
    }
  }
  total_dim_ = 1;
  for (auto& f : factors_) {
    auto it = vars_.find(f.var);
    if (it == vars_.end()) {
      throw ValidationError("word: factor variable '" + f.var + "' has no declaration");
    }
    f.modifier = normalize_modifier(f.modifier, it->second.group);
    if (total_dim_ > dim_cap / it->second.dim) {
      throw SizeOverflow("word: total dimension exceeds cap " + std::to_string(dim_cap));
    }
    total_dim_ *= it->second.dim;
  }
  for (const auto& [name, info] : vars_) {
    bool used = false;
    for (const auto& f : factors_)
      if (f.var == name) used = true;
    if (!used) {
      throw ValidationError("word: variable '" + name + "' declared but not used");
    }
  }
}

std::size_t SymmetryWord::factor_dim(std::size_t index) const {
  if (index >= factors_.size()) throw BadParams("word: factor index out of range");
  return vars_.at(factors_[index].var).dim;
}

const VarInfo& SymmetryWord::var(const std::string& name) const {
  auto it = vars_.find(name);
  if (it == vars_.end()) throw BadParams("word: unknown variable '" + name + "'");
  return it->second;
}

std::size_t SymmetryWord::var_ordinal(const std::string& name) const {
  std::size_t ordinal = 0;
  for (const auto& [key, info] : vars_) {
    (void)info;
    if (key == name) return ordinal;
    ++ordinal;
  }
  throw BadParams("word: unknown variable '" + name + "'");
}

std::string SymmetryWord::text() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += ',';
    out += factors_[i].var;
    out += suffix_string(factors_[i].modifier);
  }
  return out;
}

SymmetryWord parse_word(std::string_view text, const std::map<std::string, std::size_t>& dims,
                        const std::map<std::string, Group>& groups, std::size_t dim_cap) {
  std::vector<WordFactor> factors;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto parse_factor = [&] {
    skip_ws();
    if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected variable name at position " + std::to_string(i), i);
    }
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      ++i;
    }
    WordFactor f;
    f.var = std::string(text.substr(start, i - start));
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      f.modifier = Modifier::Conj;
      ++i;
    } else if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      if (i >= text.size() || (text[i] != 'T' && text[i] != 'H')) {
        throw ParseError("expected T or H after '^' at position " + std::to_string(i), i);
      }
      f.modifier = text[i] == 'T' ? Modifier::Transpose : Modifier::ConjTranspose;
      ++i;
    }
    factors.push_back(std::move(f));
  };

  parse_factor();
  skip_ws();
  while (i < text.size() && text[i] == ',') {
    ++i;
    parse_factor();
    skip_ws();
  }
  if (i < text.size()) {
    throw ParseError("unexpected character '" + std::string(1, text[i]) + "' at position " +
                         std::to_string(i),
                     i);
  }

  std::map<std::string, VarInfo> vars;
  for (const auto& f : factors) {
    if (vars.count(f.var)) continue;
    VarInfo info;
    auto dit = dims.find(f.var);
    if (dit == dims.end()) {
      throw DimMissing("no dimension given for variable '" + f.var + "'");
    }
    info.dim = dit->second;
    auto git = groups.find(f.var);
    info.group = git == groups.end() ? Group::Unitary : git->second;
    vars.emplace(f.var, info);
  }
  for (const auto& [name, dim] : dims) {
    (void)dim;
    if (!vars.count(name)) {
      throw ValidationError("dimension given for '" + name + "', which is not in the word");
    }
  }
  for (const auto& [name, group] : groups) {
    (void)group;
    if (!vars.count(name)) {
      throw ValidationError("group given for '" + name + "', which is not in the word");
    }
  }
  return SymmetryWord(std::move(factors), std::move(vars), dim_cap);
}

CMatrix instantiate_word(const SymmetryWord& word, const GeneratorAssignment& assignment) {
  CMatrix result;
  bool first = true;
  for (const auto& f : word.factors()) {
    auto it = assignment.matrices.find(f.var);
    if (it == assignment.matrices.end()) {
      throw BadParams("instantiate_word: no matrix assigned to '" + f.var + "'");
    }
    const CMatrix& m = it->second;
    const std::size_t want = word.var(f.var).dim;
    if (m.rows() != want || m.cols() != want) {
      throw DimensionMismatch("instantiate_word: '" + f.var + "' must be " +
                              std::to_string(want) + "x" + std::to_string(want));
    }
    CMatrix factor = apply_modifier(m, f.modifier);
    result = first ? std::move(factor) : kron(result, factor, word.total_dim());
    first = false;
  }
  return result;
}

GeneratorAssignment sample_assignment(const SymmetryWord& word, std::uint64_t seed,
                                      std::uint64_t sample_index, StreamKind kind) {
  GeneratorAssignment out;
  for (const auto& [name, info] : word.vars()) {
    RngStream rng(seed, stream_id(kind, word.var_ordinal(name), sample_index));
    switch (info.group) {
      case Group::Unitary:
        out.matrices.emplace(name, sample_haar_unitary(info.dim, rng));
        break;
      case Group::Orthogonal:
        out.matrices.emplace(name, sample_haar_orthogonal(info.dim, rng));
        break;
      case Group::Permutation:
        out.matrices.emplace(name, sample_permutation(info.dim, rng));
        break;
    }
  }
  return out;
}

}  // namespace commutant
