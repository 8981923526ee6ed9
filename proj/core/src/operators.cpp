#include "commutant/operators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "commutant/eig.hpp"

namespace commutant {

CMatrix swap_operator(std::size_t n, std::size_t dim_cap) {
  if (n == 0) throw BadParams("swap_operator: n must be positive");
  if (n > dim_cap / n) {
    throw SizeOverflow("swap_operator: n^2 exceeds dimension cap");
  }
  CMatrix f(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) f(b * n + a, a * n + b) = 1.0;
  return f;
}

CMatrix omega_projector(std::size_t n, std::size_t dim_cap) {
  if (n == 0) throw BadParams("omega_projector: n must be positive");
  if (n > dim_cap / n) {
    throw SizeOverflow("omega_projector: n^2 exceeds dimension cap");
  }
  CMatrix w(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(i * n + i, j * n + j) = 1.0;
  return w;
}

CMatrix m_tensor_m() {
  CMatrix m = CMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
  return kron(m, m);
}

CMatrix permutation_operator(const std::vector<std::size_t>& sigma, std::size_t n,
                             std::size_t dim_cap) {
  const std::size_t k = sigma.size();
  if (k == 0 || k > 4) throw BadParams("permutation_operator: need 1 to 4 slots");
  if (n == 0) throw BadParams("permutation_operator: n must be positive");
  std::vector<bool> seen(k, false);
  for (std::size_t t : sigma) {
    if (t >= k || seen[t]) throw BadParams("permutation_operator: not a permutation");
    seen[t] = true;
  }
  std::size_t dim = 1;
  for (std::size_t t = 0; t < k; ++t) {
    if (dim > dim_cap / n) throw SizeOverflow("permutation_operator: n^k exceeds cap");
    dim *= n;
  }
  CMatrix p(dim, dim);
  std::vector<std::size_t> in(k), out(k);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t rest = col;
    for (std::size_t t = k; t-- > 0;) {
      in[t] = rest % n;
      rest /= n;
    }
    for (std::size_t t = 0; t < k; ++t) out[sigma[t]] = in[t];
    std::size_t row = 0;
    for (std::size_t t = 0; t < k; ++t) row = row * n + out[t];
    p(row, col) = 1.0;
  }
  return p;
}

std::vector<std::size_t> permutation_from_cycles(std::string_view text, std::size_t k) {
  if (k == 0 || k > 4) throw BadParams("permutation_from_cycles: need 1 to 4 slots");
  std::vector<std::size_t> sigma(k);
  for (std::size_t t = 0; t < k; ++t) sigma[t] = t;
  std::vector<bool> used(k, false);
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("expected '(' at position " + std::to_string(i), i);
    }
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected slot digit at position " + std::to_string(i), i);
      }
      std::size_t v = static_cast<std::size_t>(text[i] - '0');
      if (v < 1 || v > k) {
        throw ParseError("slot " + std::to_string(v) + " out of range 1.." + std::to_string(k),
                         i);
      }
      if (used[v - 1]) {
        throw ParseError("slot " + std::to_string(v) + " repeated", i);
      }
      used[v - 1] = true;
      cycle.push_back(v - 1);
      ++i;
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", i);
    ++i;  // ')'
    for (std::size_t t = 0; t + 1 < cycle.size(); ++t) sigma[cycle[t]] = cycle[t + 1];
    if (cycle.size() > 1) sigma[cycle.back()] = cycle.front();
    skip_ws();
  }
  return sigma;
}

std::string cycle_string(const std::vector<std::size_t>& sigma) {
  const std::size_t k = sigma.size();
  std::vector<bool> visited(k, false);
  std::string out;
  for (std::size_t start = 0; start < k; ++start) {
    if (visited[start] || sigma[start] == start) {
      visited[start] = true;
      continue;
    }
    out += '(';
    std::size_t t = start;
    while (!visited[t]) {
      visited[t] = true;
      out += static_cast<char>('1' + t);
      t = sigma[t];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

CMatrix direction_operator(std::string_view name, std::size_t n, std::size_t dim_cap) {
  if (n == 0) throw BadParams("direction_operator: n must be positive");
  if (name == "I") return CMatrix::identity(n);
  if (name == "F") return swap_operator(n, dim_cap);
  if (name == "Omega" || name == "Ω") return omega_projector(n, dim_cap);
  if (name == "M⊗M" || name == "MxM") {
    if (n != 2) throw BadParams("direction_operator: M⊗M is defined at n = 2");
    return m_tensor_m();
  }
  if (name == "F⊗I" || name == "FxI") {
    return kron(swap_operator(n, dim_cap), CMatrix::identity(n), dim_cap);
  }
  throw UnknownOperator("direction_operator: unknown name '" + std::string(name) + "'");
}

CMatrix family_matrix(const FamilySpec& spec, std::size_t n, std::size_t dim_cap) {
  if (!std::isfinite(spec.x) || !std::isfinite(spec.y)) {
    throw BadParams("family_matrix: coefficients must be finite");
  }
  CMatrix b = direction_operator(spec.direction, n, dim_cap);
  CMatrix out = CMatrix::identity(b.rows());
  out *= Complex(spec.x, 0.0);
  b *= Complex(spec.y, 0.0);
  out += b;
  return out;
}

namespace {

std::string format_coeff(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

double PsdRegion::min_eigenvalue(double x, double y) const {
  double m = std::numeric_limits<double>::infinity();
  for (double lambda : eigenvalues) m = std::min(m, x + lambda * y);
  return m;
}

bool PsdRegion::contains(double x, double y, double tol) const {
  return min_eigenvalue(x, y) >= -tol;
}

PsdRegion psd_region(const CMatrix& direction, double herm_tol) {
  Spectrum s = hermitian_eig(direction, herm_tol);
  if (s.values.empty()) throw BadParams("psd_region: empty direction");

  PsdRegion region;
  const double scale = std::max(1.0, std::max(std::abs(s.values.front()),
                                              std::abs(s.values.back())));
  for (double v : s.values) {
    if (region.eigenvalues.empty() || v - region.eigenvalues.back() > 1e-9 * scale) {
      region.eigenvalues.push_back(v);
    }
  }
  for (double lambda : region.eigenvalues) {
    if (std::abs(lambda) <= 1e-9 * scale) {
      region.inequalities.push_back("x >= 0");
    } else if (std::abs(lambda - 1.0) <= 1e-9 * scale) {
      region.inequalities.push_back("x + y >= 0");
    } else if (std::abs(lambda + 1.0) <= 1e-9 * scale) {
      region.inequalities.push_back("x - y >= 0");
    } else {
      region.inequalities.push_back("x + (" + format_coeff(lambda) + ")*y >= 0");
    }
  }
  const double lo = region.eigenvalues.front();
  const double hi = region.eigenvalues.back();
  region.abs_cone = std::abs(lo + 1.0) <= 1e-9 * scale && std::abs(hi - 1.0) <= 1e-9 * scale;

  // two extreme rays: the binding constraint for y >= 0 is lambda_min, for
  // y <= 0 it is lambda_max
  for (double t : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    region.boundary_points.emplace_back(-lo * t, t);
    if (t > 0.0) region.boundary_points.emplace_back(hi * t, -t);
  }
  return region;
}

PsdRegion psd_region(std::string_view direction_name, std::size_t n, std::size_t dim_cap) {
  PsdRegion region = psd_region(direction_operator(direction_name, n, dim_cap));
  region.direction_name = std::string(direction_name);
  return region;
}

CMatrix normalize_state(const CMatrix& w, double psd_tol) {
  Spectrum s = hermitian_eig(w);
  if (s.values.empty()) throw BadParams("normalize_state: empty matrix");
  if (s.values.front() < -psd_tol) {
    throw NotPsd("normalize_state: minimum eigenvalue " + std::to_string(s.values.front()) +
                 " below -" + std::to_string(psd_tol));
  }
  const double tr = trace(w).real();
  if (!(tr > 0.0)) {
    throw ZeroTrace("normalize_state: trace " + std::to_string(tr) + " not positive");
  }
  CMatrix out = w;
  out *= Complex(1.0 / tr, 0.0);
  if (!all_finite(out)) throw ZeroTrace("normalize_state: trace too small to scale by");
  return out;
}

void OperatorLibrary::add(std::string name, CMatrix op) {
  if (name.empty()) throw BadParams("OperatorLibrary: empty name");
  if (!op.is_square()) throw BadParams("OperatorLibrary: '" + name + "' is not square");
  if (!all_finite(op)) throw ValidationError("OperatorLibrary: '" + name + "' has non-finite entries");
  if (find(name) != nullptr) throw BadParams("OperatorLibrary: duplicate name '" + name + "'");
  if (entries_.empty()) {
    dim_ = op.rows();
  } else if (op.rows() != dim_) {
    throw DimensionMismatch("OperatorLibrary: '" + name + "' has dimension " +
                            std::to_string(op.rows()) + ", library holds " +
                            std::to_string(dim_));
  }
  entries_.push_back({std::move(name), std::move(op)});
}

const CMatrix* OperatorLibrary::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e.op;
  }
  return nullptr;
}

OperatorLibrary OperatorLibrary::for_word(const SymmetryWord& word,
                                          std::vector<std::string>* pruned) {
  const std::size_t total = word.total_dim();
  std::vector<Entry> candidates;
  candidates.push_back({"I", CMatrix::identity(total)});

  const auto& factors = word.factors();
  const std::size_t k = factors.size();
  bool same_var = true;
  bool all_plain = true;
  for (const auto& f : factors) {
    if (f.var != factors.front().var) same_var = false;
    if (f.modifier != Modifier::Id) all_plain = false;
  }

  if (same_var) {
    const std::size_t n = word.factor_dim(0);
    if (k == 2) {
      candidates.push_back({"F", swap_operator(n)});
      candidates.push_back({"Omega", omega_projector(n)});
      if (n == 2) candidates.push_back({"M⊗M", m_tensor_m()});
    }
    if (k == 3) {
      candidates.push_back({"F⊗I", kron(swap_operator(n), CMatrix::identity(n))});
    }
    if (all_plain && k >= 2 && k <= 4 && total <= kDefaultDimCap) {
      // factor permutations; identity is already present as I
      std::vector<std::size_t> sigma(k);
      for (std::size_t t = 0; t < k; ++t) sigma[t] = t;
      std::sort(sigma.begin(), sigma.end());
      do {
        bool is_id = true;
        for (std::size_t t = 0; t < k; ++t)
          if (sigma[t] != t) is_id = false;
        if (is_id) continue;
        candidates.push_back({"pi" + cycle_string(sigma), permutation_operator(sigma, n)});
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }

  // Greedy numerical independence filter so downstream least-squares fits see
  // a well-conditioned Gram. Dropped names are reported, not an error.
  OperatorLibrary lib;
  std::vector<CMatrix> ortho;
  for (auto& cand : candidates) {
    CMatrix r = cand.op;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : ortho) {
        Complex c = hs_inner(q, r);
        CMatrix scaled = q;
        scaled *= c;
        r -= scaled;
      }
    }
    const double residual = frobenius_norm(r);
    if (residual <= 1e-8 * frobenius_norm(cand.op)) {
      if (pruned != nullptr) pruned->push_back(cand.name);
      continue;
    }
    r *= Complex(1.0 / residual, 0.0);
    ortho.push_back(std::move(r));
    lib.add(std::move(cand.name), std::move(cand.op));
  }
  return lib;
}

}  // namespace commutant
