#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "commutant/operators.hpp"
#include "commutant/solver.hpp"
#include "commutant/twirl.hpp"

namespace commutant {

// ordered_json keeps insertion order, which keeps artifacts byte-stable
using Json = nlohmann::ordered_json;

// Matrix wire format: {"rows": R, "cols": C, "data": [[re, im], ...]},
// data row-major, one [re, im] pair per entry.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

CMatrix load_matrix(const std::filesystem::path& path);
Json load_json(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

// Everything a CLI run needs to be reproduced; embedded in every artifact.
struct RunConfig {
  std::string word_text;
  std::map<std::string, std::size_t> dims;
  std::map<std::string, Group> groups;
  std::uint64_t seed = 0;
  int samples = 4;
  int mc_samples = 1000;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
};

Json config_to_json(const RunConfig& config);

Json basis_to_json(const CommutantBasis& basis);
CommutantBasis basis_from_json(const Json& j);

Json recognition_to_json(const RecognitionReport& report);
Json region_to_json(const PsdRegion& region);
Json twirl_to_json(const TwirlResult& result, bool include_output = true);
Json convergence_to_json(const ConvergenceReport& report);

// Direct-route grid scan: the minimum eigenvalue of x I + y direction at
// every grid point, computed by full eigensolve. Columns x, y, min_eigenvalue.
std::string region_grid_csv(const CMatrix& direction, double lo, double hi,
                            std::size_t points_per_axis);
std::string convergence_csv(const ConvergenceReport& report);

}  // namespace commutant
