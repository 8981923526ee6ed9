#include "commutant/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "commutant/eig.hpp"

namespace commutant {

namespace {

Json double_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_or_inf(const Json& j, const char* what) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ValidationError(std::string(what) + ": unexpected string '" + s + "'");
  }
  if (!j.is_number()) throw ValidationError(std::string(what) + ": expected a number");
  return j.get<double>();
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (const auto& e : m.entries()) data.push_back(complex_to_json(e));
  j["data"] = std::move(data);
  return j;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw ValidationError("matrix: expected object with rows, cols, data");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    throw ValidationError("matrix: rows and cols must be non-negative integers");
  }
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  const Json& data = j["data"];
  if (!data.is_array() || data.size() != rows * cols) {
    throw ValidationError("matrix: data must hold rows*cols [re, im] pairs");
  }
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto& cell : data) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
      throw ValidationError("matrix: each entry must be an [re, im] number pair");
    }
    entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
  }
  return CMatrix(rows, cols, std::move(entries));
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return j;
}

CMatrix load_matrix(const std::filesystem::path& path) { return matrix_from_json(load_json(path)); }

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read from '" + path.string() + "' failed");
  return ss.str();
}

Json config_to_json(const RunConfig& config) {
  Json j;
  j["word"] = config.word_text;
  Json dims = Json::object();
  for (const auto& [name, dim] : config.dims) dims[name] = dim;
  j["dims"] = std::move(dims);
  Json groups = Json::object();
  for (const auto& [name, group] : config.groups) groups[name] = to_string(group);
  j["groups"] = std::move(groups);
  j["seed"] = config.seed;
  j["samples"] = config.samples;
  j["mc_samples"] = config.mc_samples;
  if (config.tol.has_value()) {
    j["tol"] = *config.tol;
  } else {
    j["tol"] = nullptr;
  }
  j["format"] = config.format;
  j["out"] = config.out;
  return j;
}

Json basis_to_json(const CommutantBasis& basis) {
  Json j;
  j["word"] = basis.word.text();
  Json dims = Json::object();
  Json groups = Json::object();
  for (const auto& [name, info] : basis.word.vars()) {
    dims[name] = info.dim;
    groups[name] = to_string(info.group);
  }
  j["dims"] = std::move(dims);
  j["groups"] = std::move(groups);
  j["total_dim"] = basis.total_dim();
  j["dim"] = basis.dim();
  j["gap"] = double_or_inf(basis.gap);
  j["residual"] = basis.residual;
  j["samples_used"] = basis.samples_used;
  j["seed"] = basis.seed;
  Json elems = Json::array();
  for (const auto& b : basis.basis) elems.push_back(matrix_to_json(b));
  j["basis"] = std::move(elems);
  return j;
}

CommutantBasis basis_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("word") || !j.contains("dims") || !j.contains("basis")) {
    throw ValidationError("basis: expected object with word, dims, basis");
  }
  std::map<std::string, std::size_t> dims;
  for (const auto& [name, dim] : j["dims"].items()) {
    if (!dim.is_number_unsigned()) throw ValidationError("basis: dims must be positive integers");
    dims[name] = dim.get<std::size_t>();
  }
  std::map<std::string, Group> groups;
  if (j.contains("groups")) {
    for (const auto& [name, group] : j["groups"].items()) {
      groups[name] = group_from_string(group.get<std::string>());
    }
  }
  CommutantBasis basis;
  basis.word = parse_word(j["word"].get<std::string>(), dims, groups);
  basis.gap = j.contains("gap") ? number_or_inf(j["gap"], "basis gap")
                                : std::numeric_limits<double>::infinity();
  basis.residual = j.value("residual", 0.0);
  basis.samples_used = j.value("samples_used", 0);
  basis.seed = j.value("seed", std::uint64_t{0});
  const std::size_t d = basis.word.total_dim();
  for (const auto& m : j["basis"]) {
    CMatrix b = matrix_from_json(m);
    if (b.rows() != d || b.cols() != d) {
      throw ValidationError("basis: element dimension does not match the word");
    }
    basis.basis.push_back(std::move(b));
  }
  return basis;
}

Json recognition_to_json(const RecognitionReport& report) {
  Json j;
  j["verdict"] = to_string(report.verdict);
  j["fit_tol"] = report.fit_tol;
  Json library = Json::array();
  if (!report.elements.empty()) {
    for (const auto& [name, coeff] : report.elements.front().coefficients) {
      (void)coeff;
      library.push_back(name);
    }
  }
  j["library"] = std::move(library);
  Json elements = Json::array();
  for (const auto& e : report.elements) {
    Json ej;
    Json coeffs = Json::object();
    for (const auto& [name, coeff] : e.coefficients) coeffs[name] = complex_to_json(coeff);
    ej["coefficients"] = std::move(coeffs);
    ej["residual"] = e.residual;
    ej["recognized"] = e.recognized;
    elements.push_back(std::move(ej));
  }
  j["elements"] = std::move(elements);
  return j;
}

Json region_to_json(const PsdRegion& region) {
  Json j;
  if (region.direction_name.has_value()) j["direction"] = *region.direction_name;
  j["eigenvalues"] = region.eigenvalues;
  j["inequalities"] = region.inequalities;
  j["abs_cone"] = region.abs_cone;
  Json pts = Json::array();
  for (const auto& [x, y] : region.boundary_points) pts.push_back(Json::array({x, y}));
  j["boundary_points"] = std::move(pts);
  return j;
}

Json twirl_to_json(const TwirlResult& result, bool include_output) {
  Json j;
  j["n_samples"] = result.n_samples;
  j["trace_in"] = complex_to_json(result.trace_in);
  j["trace_out"] = complex_to_json(result.trace_out);
  if (result.error_vs_exact.has_value()) {
    j["error_vs_exact"] = *result.error_vs_exact;
  } else {
    j["error_vs_exact"] = nullptr;
  }
  if (include_output) j["output"] = matrix_to_json(result.output);
  return j;
}

Json convergence_to_json(const ConvergenceReport& report) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : report.points) {
    Json pj;
    pj["n_samples"] = p.n_samples;
    pj["error"] = p.error;
    pts.push_back(std::move(pj));
  }
  j["points"] = std::move(pts);
  if (report.slope.has_value()) {
    j["slope"] = *report.slope;
  } else {
    j["slope"] = nullptr;
  }
  return j;
}

std::string region_grid_csv(const CMatrix& direction, double lo, double hi,
                            std::size_t points_per_axis) {
  if (points_per_axis < 2) throw BadParams("region_grid_csv: need at least 2 points per axis");
  if (!(hi > lo)) throw BadParams("region_grid_csv: empty range");
  const std::size_t d = direction.rows();
  std::string csv = "x,y,min_eigenvalue\n";
  const double step = (hi - lo) / static_cast<double>(points_per_axis - 1);
  const CMatrix eye = CMatrix::identity(d);
  for (std::size_t ix = 0; ix < points_per_axis; ++ix) {
    const double x = lo + step * static_cast<double>(ix);
    for (std::size_t iy = 0; iy < points_per_axis; ++iy) {
      const double y = lo + step * static_cast<double>(iy);
      CMatrix fam = eye;
      fam *= Complex(x, 0.0);
      CMatrix dir = direction;
      dir *= Complex(y, 0.0);
      fam += dir;
      csv += fmt(x);
      csv += ',';
      csv += fmt(y);
      csv += ',';
      csv += fmt(min_eigenvalue(fam));
      csv += '\n';
    }
  }
  return csv;
}

std::string convergence_csv(const ConvergenceReport& report) {
  std::string csv = "n_samples,error\n";
  for (const auto& p : report.points) {
    csv += std::to_string(p.n_samples);
    csv += ',';
    csv += fmt(p.error);
    csv += '\n';
  }
  return csv;
}

}  // namespace commutant
