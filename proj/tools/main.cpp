// Command line front end: solve commutants of tensor-word symmetries, verify
// invariance of user matrices, twirl matrices onto the commutant, and map PSD
// regions of closed-form operator families.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commutant/io.hpp"

namespace {

using commutant::CMatrix;
using commutant::Json;
using commutant::RunConfig;

std::pair<std::string, std::string> split_kv(const std::string& item, const char* what) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
    throw commutant::ValidationError(std::string(what) + ": expected VAR=value, got '" + item +
                                     "'");
  }
  return {item.substr(0, eq), item.substr(eq + 1)};
}

RunConfig make_config(const std::string& word, const std::vector<std::string>& dim_items,
                      const std::vector<std::string>& group_items, std::uint64_t seed,
                      int samples, int mc_samples, std::optional<double> tol,
                      const std::string& format, const std::string& out) {
  RunConfig config;
  config.word_text = word;
  for (const auto& item : dim_items) {
    auto [var, value] = split_kv(item, "--dim");
    std::size_t dim = 0;
    try {
      dim = std::stoul(value);
    } catch (const std::exception&) {
      throw commutant::ValidationError("--dim: '" + value + "' is not a dimension");
    }
    if (dim == 0) throw commutant::ValidationError("--dim: dimension must be positive");
    if (config.dims.count(var)) {
      throw commutant::ValidationError("--dim: variable '" + var + "' given twice");
    }
    config.dims[var] = dim;
  }
  for (const auto& item : group_items) {
    auto [var, value] = split_kv(item, "--group");
    if (config.groups.count(var)) {
      throw commutant::ValidationError("--group: variable '" + var + "' given twice");
    }
    config.groups[var] = commutant::group_from_string(value);
  }
  if (format != "json" && format != "text") {
    throw commutant::ValidationError("--format: expected json or text, got '" + format + "'");
  }
  config.seed = seed;
  config.samples = samples;
  config.mc_samples = mc_samples;
  config.tol = tol;
  config.format = format;
  config.out = out;
  return config;
}

commutant::SymmetryWord build_word(const RunConfig& config) {
  return commutant::parse_word(config.word_text, config.dims, config.groups);
}

// ---- text renderings, shared by --format text and the report subcommand ----

std::string render_number(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "n/a";
  std::ostringstream ss;
  ss << j.get<double>();
  return ss.str();
}

std::string render_commutant_text(const Json& artifact) {
  const Json& r = artifact.at("result");
  std::ostringstream ss;
  ss << "word:         " << artifact.at("config").at("word").get<std::string>() << "\n";
  ss << "total dim:    " << r.at("total_dim").get<std::size_t>() << "\n";
  ss << "commutant dim " << r.at("dim").get<std::size_t>() << "\n";
  ss << "spectral gap: " << render_number(r.at("gap")) << "\n";
  ss << "residual:     " << render_number(r.at("residual")) << "\n";
  ss << "samples used: " << r.at("samples_used").get<int>() << "\n";
  const Json& rec = r.at("recognition");
  ss << "recognition:  " << rec.at("verdict").get<std::string>() << " against {";
  bool first = true;
  for (const auto& name : rec.at("library")) {
    if (!first) ss << ", ";
    ss << name.get<std::string>();
    first = false;
  }
  ss << "}\n";
  for (std::size_t i = 0; i < rec.at("elements").size(); ++i) {
    const Json& e = rec.at("elements")[i];
    ss << "  element " << i << ": residual " << render_number(e.at("residual"));
    if (e.at("recognized").get<bool>()) {
      ss << ", coefficients";
      for (const auto& [name, c] : e.at("coefficients").items()) {
        ss << " " << name << "=(" << c[0].get<double>() << "," << c[1].get<double>() << ")";
      }
    } else {
      ss << ", outside the library span";
    }
    ss << "\n";
  }
  if (r.contains("pruned_library") && !r.at("pruned_library").empty()) {
    ss << "pruned:       ";
    bool p_first = true;
    for (const auto& name : r.at("pruned_library")) {
      if (!p_first) ss << ", ";
      ss << name.get<std::string>();
      p_first = false;
    }
    ss << " (numerically dependent on earlier library entries)\n";
  }
  for (const auto& flag : r.at("flags")) {
    ss << "flag:         " << flag.get<std::string>() << "\n";
  }
  return ss.str();
}

std::string render_verify_text(const Json& artifact) {
  const Json& r = artifact.at("result");
  std::ostringstream ss;
  ss << "word:      " << artifact.at("config").at("word").get<std::string>() << "\n";
  ss << "residual:  " << render_number(r.at("max_residual")) << "\n";
  ss << "threshold: " << render_number(r.at("threshold")) << "\n";
  ss << "invariant: " << (r.at("pass").get<bool>() ? "yes" : "no") << "\n";
  return ss.str();
}

std::string render_twirl_text(const Json& artifact) {
  const Json& r = artifact.at("result");
  std::ostringstream ss;
  ss << "word:        " << artifact.at("config").at("word").get<std::string>() << "\n";
  ss << "mc samples:  " << r.at("n_samples").get<int>() << "\n";
  ss << "trace in:    (" << r.at("trace_in")[0].get<double>() << ","
     << r.at("trace_in")[1].get<double>() << ")\n";
  ss << "trace out:   (" << r.at("trace_out")[0].get<double>() << ","
     << r.at("trace_out")[1].get<double>() << ")\n";
  ss << "mc error:    " << render_number(r.at("error_vs_exact")) << "\n";
  if (r.contains("convergence")) {
    const Json& conv = r.at("convergence");
    ss << "convergence: slope " << render_number(conv.at("slope")) << "\n";
    for (const auto& p : conv.at("points")) {
      ss << "  N=" << p.at("n_samples").get<int>() << "  error " << render_number(p.at("error"))
         << "\n";
    }
  }
  return ss.str();
}

std::string render_region_text(const Json& artifact) {
  const Json& r = artifact.at("result");
  std::ostringstream ss;
  ss << "direction:    " << r.value("direction", std::string("(custom)")) << "\n";
  ss << "eigenvalues: ";
  for (const auto& v : r.at("eigenvalues")) ss << " " << v.get<double>();
  ss << "\n";
  ss << "psd region:\n";
  for (const auto& ineq : r.at("inequalities")) {
    ss << "  " << ineq.get<std::string>() << "\n";
  }
  if (r.at("abs_cone").get<bool>()) {
    ss << "closed cone:  x >= |y|\n";
  }
  return ss.str();
}

std::string render_artifact_text(const Json& artifact) {
  const std::string kind = artifact.value("kind", std::string());
  if (kind == "commutant") return render_commutant_text(artifact);
  if (kind == "verify") return render_verify_text(artifact);
  if (kind == "twirl") return render_twirl_text(artifact);
  if (kind == "region") return render_region_text(artifact);
  throw commutant::ValidationError("report: unknown artifact kind '" + kind + "'");
}

// stdout for pipe-friendly output; --out redirects the artifact to a file
void emit(const Json& artifact, const RunConfig& config) {
  std::string payload;
  if (config.format == "text") {
    payload = render_artifact_text(artifact);
  } else {
    payload = artifact.dump(2);
    payload += '\n';
  }
  if (config.out.empty()) {
    std::cout << payload;
  } else {
    commutant::save_text(config.out, payload);
    std::cout << "wrote " << config.out << "\n";
  }
}

Json artifact_shell(const char* kind, const RunConfig& config) {
  Json artifact;
  artifact["kind"] = kind;
  artifact["config"] = commutant::config_to_json(config);
  return artifact;
}

int cmd_commutant(const RunConfig& config) {
  const commutant::SymmetryWord word = build_word(config);
  commutant::SolveOptions opts;
  opts.seed = config.seed;
  opts.n_samples = config.samples;
  if (config.tol.has_value()) opts.rank.rel_tol = *config.tol;
  const commutant::CommutantBasis basis = commutant_basis(word, opts);

  std::vector<std::string> pruned;
  const commutant::OperatorLibrary lib = commutant::OperatorLibrary::for_word(word, &pruned);
  const commutant::RecognitionReport recognition = recognize_basis(basis, lib);
  const std::vector<std::string> flags = commutant_flags(basis, recognition);

  Json artifact = artifact_shell("commutant", config);
  Json result = commutant::basis_to_json(basis);
  result["recognition"] = commutant::recognition_to_json(recognition);
  result["pruned_library"] = pruned;
  result["flags"] = flags;
  artifact["result"] = std::move(result);
  emit(artifact, config);
  return 0;
}

int cmd_verify(const RunConfig& config, const std::string& matrix_path, int trials) {
  const commutant::SymmetryWord word = build_word(config);
  const CMatrix w = commutant::load_matrix(matrix_path);
  const double residual = commutant::check_invariance(w, word, trials, config.seed);
  const double threshold = config.tol.value_or(1e-8);
  const bool pass = residual < threshold;

  Json artifact = artifact_shell("verify", config);
  Json result;
  result["matrix"] = matrix_path;
  result["trials"] = trials;
  result["max_residual"] = residual;
  result["threshold"] = threshold;
  result["pass"] = pass;
  artifact["result"] = std::move(result);
  emit(artifact, config);
  return pass ? 0 : 1;
}

std::vector<int> parse_schedule(const std::string& text) {
  std::vector<int> schedule;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      schedule.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw commutant::ValidationError("--schedule: '" + item + "' is not a sample count");
    }
  }
  if (schedule.empty()) throw commutant::ValidationError("--schedule: no sample counts given");
  return schedule;
}

int cmd_twirl(const RunConfig& config, const std::string& matrix_path, bool no_exact,
              const std::string& schedule_text) {
  const commutant::SymmetryWord word = build_word(config);
  const CMatrix w = commutant::load_matrix(matrix_path);

  std::optional<commutant::CommutantBasis> basis;
  if (!no_exact) {
    commutant::SolveOptions opts;
    opts.seed = config.seed;
    basis = commutant_basis(word, opts);
  }
  const commutant::TwirlResult result =
      mc_twirl(w, word, config.mc_samples, config.seed, basis ? &*basis : nullptr);

  Json artifact = artifact_shell("twirl", config);
  Json rj = commutant::twirl_to_json(result);
  if (basis) {
    rj["exact_projection"] = commutant::matrix_to_json(exact_project(w, *basis));
    rj["commutant_dim"] = basis->dim();
  }
  std::string csv;
  if (!schedule_text.empty()) {
    if (!basis) {
      throw commutant::ValidationError("--schedule needs the exact projection (drop --no-exact)");
    }
    const commutant::ConvergenceReport report =
        convergence_report(w, word, *basis, parse_schedule(schedule_text), config.seed);
    rj["convergence"] = commutant::convergence_to_json(report);
    csv = commutant::convergence_csv(report);
  }
  artifact["result"] = std::move(rj);
  emit(artifact, config);
  if (!csv.empty() && !config.out.empty()) {
    std::filesystem::path csv_path(config.out);
    csv_path.replace_extension("csv");
    commutant::save_text(csv_path, csv);
    std::cout << "wrote " << csv_path.string() << "\n";
  }
  return 0;
}

int cmd_region(const RunConfig& config, const std::string& direction, std::size_t n, double lo,
               double hi, std::size_t grid_points) {
  const commutant::PsdRegion region = commutant::psd_region(direction, n);
  const CMatrix op = commutant::direction_operator(direction, n);
  const std::string csv = commutant::region_grid_csv(op, lo, hi, grid_points);

  Json artifact = artifact_shell("region", config);
  Json result = commutant::region_to_json(region);
  result["local_dim"] = n;
  result["grid"] = Json{{"lo", lo}, {"hi", hi}, {"points_per_axis", grid_points}};
  if (config.out.empty()) {
    result["grid_csv"] = csv;
  }
  artifact["result"] = std::move(result);
  emit(artifact, config);
  if (!config.out.empty()) {
    std::filesystem::path csv_path(config.out);
    csv_path.replace_extension("csv");
    commutant::save_text(csv_path, csv);
    std::cout << "wrote " << csv_path.string() << "\n";
  }
  return 0;
}

int cmd_report(const std::string& artifact_path) {
  const Json artifact = commutant::load_json(artifact_path);
  std::cout << render_artifact_text(artifact);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  // single-threaded BLAS keeps runs bit-reproducible
  setenv("OPENBLAS_NUM_THREADS", "1", 0);

  CLI::App app{"numerical commutants of tensor-word unitary symmetries"};
  app.require_subcommand(1);

  std::string word;
  std::vector<std::string> dim_items;
  std::vector<std::string> group_items;
  std::uint64_t seed = 0;
  int samples = 4;
  int mc_samples = 1000;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
  std::string matrix_path;
  std::string schedule_text;
  int trials = 50;
  bool no_exact = false;
  std::string direction = "F";
  std::size_t local_dim = 2;
  double lo = -1.0, hi = 1.0;
  std::size_t grid_points = 21;
  std::string artifact_path;

  const auto add_word_opts = [&](CLI::App* sub, bool needs_word) {
    sub->add_option("--word", word, "tensor word, e.g. U,U^H or U,V")->required(needs_word);
    sub->add_option("--dim", dim_items, "variable dimension, VAR=n (repeatable)");
    sub->add_option("--group", group_items,
                    "variable group, VAR=unitary|orthogonal|permutation (repeatable)");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--tol", tol, "context tolerance (rank cutoff / pass threshold)");
    sub->add_option("--format", format, "json or text")->capture_default_str();
    sub->add_option("--out", out, "write the artifact to this path instead of stdout");
  };

  CLI::App* solve = app.add_subcommand("commutant", "solve the commutant of a word");
  add_word_opts(solve, true);
  solve->add_option("--samples", samples, "initial Haar sample count")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "check a matrix for word invariance");
  add_word_opts(verify, true);
  verify->add_option("--matrix", matrix_path, "path to a matrix JSON file")->required();
  verify->add_option("--trials", trials, "Haar trials")->capture_default_str();

  CLI::App* twirl = app.add_subcommand("twirl", "Monte Carlo twirl a matrix onto the commutant");
  add_word_opts(twirl, true);
  twirl->add_option("--matrix", matrix_path, "path to a matrix JSON file")->required();
  twirl->add_option("-N,--mc-samples", mc_samples, "Monte Carlo sample count")
      ->capture_default_str();
  twirl->add_flag("--no-exact", no_exact, "skip the exact projection reference");
  twirl->add_option("--schedule", schedule_text,
                    "convergence schedule, comma separated sample counts");

  CLI::App* region = app.add_subcommand("region", "PSD region of x*I + y*direction");
  region->add_option("--direction", direction, "operator name: F, Omega, M⊗M, F⊗I, I")
      ->capture_default_str();
  region->add_option("--dim", local_dim, "local dimension n")->capture_default_str();
  region->add_option("--lo", lo, "grid lower bound")->capture_default_str();
  region->add_option("--hi", hi, "grid upper bound")->capture_default_str();
  region->add_option("--grid", grid_points, "grid points per axis")->capture_default_str();
  region->add_option("--seed", seed, "RNG seed (unused, kept for uniform artifacts)");
  region->add_option("--format", format, "json or text")->capture_default_str();
  region->add_option("--out", out, "write the artifact here; grid lands in a sibling .csv");

  CLI::App* report = app.add_subcommand("report", "render a saved artifact as text");
  report->add_option("artifact", artifact_path, "path to an artifact JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 5;
  }

  try {
    if (solve->parsed() || verify->parsed() || twirl->parsed()) {
      const RunConfig config =
          make_config(word, dim_items, group_items, seed, samples, mc_samples, tol, format, out);
      if (solve->parsed()) return cmd_commutant(config);
      if (verify->parsed()) return cmd_verify(config, matrix_path, trials);
      return cmd_twirl(config, matrix_path, no_exact, schedule_text);
    }
    if (region->parsed()) {
      RunConfig config = make_config("", {}, {}, seed, samples, mc_samples, tol, format, out);
      config.word_text = "";
      return cmd_region(config, direction, local_dim, lo, hi, grid_points);
    }
    return cmd_report(artifact_path);
  } catch (const commutant::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
