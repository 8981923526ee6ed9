#include "commutant/twirl.hpp"

#include <cmath>
#include <string>

#include "compensated.hpp"

namespace commutant {

namespace {

void require_word_matrix(const CMatrix& w, const SymmetryWord& word, const char* what) {
  const std::size_t d = word.total_dim();
  if (w.rows() != d || w.cols() != d) {
    throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(w.rows()) +
                            "x" + std::to_string(w.cols()) + ", word acts on dimension " +
                            std::to_string(d));
  }
  if (!all_finite(w)) throw ValidationError(std::string(what) + ": non-finite entries");
}

// Words that are not group homomorphisms (U,U^H and friends) have image sets
// that are not groups; averaging single instances converges to a biased
// channel, not to the commutant projection. Conjugating each term by a
// product of independently assigned instances mixes the sample onto the
// generated group (bias contracts geometrically per step, and products of
// Haar instances stay exactly Haar for homomorphism words).
constexpr int kMixSteps = 16;

// sample_base offsets keep schedule points on disjoint substreams
CMatrix mc_average(const CMatrix& w, const SymmetryWord& word, int n_samples,
                   std::uint64_t seed, std::uint64_t sample_base) {
  const std::size_t d = word.total_dim();
  std::vector<detail::CompensatedComplexSum> acc(d * d);
  for (int s = 0; s < n_samples; ++s) {
    const std::uint64_t term_base =
        sample_base + static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(kMixSteps);
    CMatrix g;
    for (int j = 0; j < kMixSteps; ++j) {
      const GeneratorAssignment assignment = sample_assignment(
          word, seed, term_base + static_cast<std::uint64_t>(j), StreamKind::Twirl);
      const CMatrix step = instantiate_word(word, assignment);
      g = g.empty() ? step : matmul(g, step);
    }
    const CMatrix term = matmul(matmul(g, w), adjoint(g));
    for (std::size_t k = 0; k < term.size(); ++k) acc[k].add(term.entries()[k]);
  }
  CMatrix out(d, d);
  const double inv = 1.0 / static_cast<double>(n_samples);
  for (std::size_t k = 0; k < acc.size(); ++k) out.entries()[k] = acc[k].value() * inv;
  return out;
}

}  // namespace

TwirlResult mc_twirl(const CMatrix& w, const SymmetryWord& word, int n_samples,
                     std::uint64_t seed, const CommutantBasis* reference) {
  require_word_matrix(w, word, "mc_twirl");
  if (n_samples < 1) throw BadParams("mc_twirl: n_samples must be positive");

  TwirlResult result;
  result.output = mc_average(w, word, n_samples, seed, 0);
  result.n_samples = n_samples;
  result.trace_in = trace(w);
  result.trace_out = trace(result.output);
  if (reference != nullptr) {
    if (reference->word.text() != word.text()) {
      throw BadParams("mc_twirl: reference basis solves word " + reference->word.text() +
                      ", not " + word.text());
    }
    result.error_vs_exact = distance(result.output, exact_project(w, *reference));
  }
  return result;
}

CMatrix exact_project(const CMatrix& w, const CommutantBasis& basis) {
  require_word_matrix(w, basis.word, "exact_project");
  const std::size_t d = basis.total_dim();
  CMatrix out(d, d);
  for (const auto& b : basis.basis) {
    CMatrix scaled = b;
    scaled *= hs_inner(b, w);
    out += scaled;
  }
  return out;
}

ConvergenceReport convergence_report(const CMatrix& w, const SymmetryWord& word,
                                     const CommutantBasis& basis,
                                     const std::vector<int>& schedule, std::uint64_t seed) {
  require_word_matrix(w, word, "convergence_report");
  if (basis.word.text() != word.text()) {
    throw BadParams("convergence_report: reference basis solves word " + basis.word.text() +
                    ", not " + word.text());
  }
  if (schedule.empty()) throw BadParams("convergence_report: empty schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1 || (i > 0 && schedule[i] <= schedule[i - 1])) {
      throw BadParams("convergence_report: schedule must be positive and strictly increasing");
    }
  }
  const CMatrix exact = exact_project(w, basis);

  ConvergenceReport report;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const std::uint64_t base = (static_cast<std::uint64_t>(i) + 1) << 32;
    const CMatrix estimate = mc_average(w, word, schedule[i], seed, base);
    report.points.push_back({schedule[i], distance(estimate, exact)});
  }

  bool at_floor = false;
  for (const auto& p : report.points) {
    if (p.error <= 1e-13) at_floor = true;
  }
  if (!at_floor && report.points.size() >= 2) {
    // least squares on (log N, log error)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double m = static_cast<double>(report.points.size());
    for (const auto& p : report.points) {
      const double lx = std::log(static_cast<double>(p.n_samples));
      const double ly = std::log(p.error);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    report.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return report;
}

}  // namespace commutant
