#include "qjt/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qjt/qjt.hpp"

namespace qjt::cli {

namespace fs = std::filesystem;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Format resolve_format(const fs::path& path, Format requested) {
  if (requested != Format::Auto) return requested;
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".edges" || ext == ".txt") return Format::Edges;
  if (ext == ".mtx") return Format::Mtx;
  if (ext == ".off") return Format::Off;
  throw Error(Errc::UnknownFormat,
              "cannot infer format from extension \"" + ext + "\"; pass --format");
}

Graph load_graph(const fs::path& path, Format format, bool one_based) {
  const Format f = resolve_format(path, format);
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open file");
  switch (f) {
    case Format::Edges: return parse_edge_list(in, one_based);
    case Format::Mtx: return parse_matrix_market(in);
    case Format::Off: return parse_off_mesh(in);
    case Format::Auto: break;
  }
  throw Error(Errc::UnknownFormat, "unresolved format");
}

Eigen::MatrixXd figure_table(const std::vector<double>& alphas, std::size_t grid) {
  if (alphas.empty()) throw Error(Errc::InvalidArgument, "--alpha-list is empty");
  for (double a : alphas) {
    if (!(a >= 0.0)) {
      throw Error(Errc::InvalidAlpha, "alpha " + format_number(a) + " is negative");
    }
  }
  if (grid < 2) throw Error(Errc::InvalidArgument, "--grid needs at least 2 points");

  const auto rows = static_cast<Eigen::Index>(grid);
  Eigen::MatrixXd table(rows, static_cast<Eigen::Index>(alphas.size()) + 1);
  const double last = static_cast<double>(grid - 1);
  for (Eigen::Index k = 0; k < rows; ++k) {
    const double p = static_cast<double>(k) / last;
    const auto rho = DensityMatrix<double>::diagonal(Eigen::Vector2d(p, 1.0 - p));
    table(k, 0) = p;
    for (std::size_t c = 0; c < alphas.size(); ++c) {
      const double a = alphas[c];
      // alpha = 0 lies outside the entropic-index domain; use tr(rho^0) - 1.
      table(k, static_cast<Eigen::Index>(c) + 1) =
          a == 0.0 ? trace_power(rho, 0.0) - 1.0 : tsallis_entropy(rho, EntropicIndex<double>(a));
    }
  }
  return table;
}

namespace {

enum class Measure { Tsallis, Renyi, VonNeumann };

struct RunConfig {
  std::vector<std::string> inputs;
  std::string dir;
  Format format = Format::Auto;
  double alpha = 2.0;
  std::vector<double> alpha_list;
  std::vector<double> weights;
  Measure measure = Measure::Tsallis;
  bool normalized = true;
  bool one_based = false;
  bool skip_bad = false;
  std::size_t grid = 101;
  std::string kind = "laplacian";
  std::string out;
};

// Failure tied to one input file; the message names it.
class InputError : public Error {
 public:
  InputError(const std::string& file, const Error& cause)
      : Error(cause.code(), file + ": " + cause.what()) {}
};

Graph load(const std::string& file, const RunConfig& cfg) {
  try {
    return load_graph(file, cfg.format, cfg.one_based);
  } catch (const Error& e) {
    throw InputError(file, e);
  }
}

DensityMatrix<double> load_density(const std::string& file, const RunConfig& cfg) {
  const Graph g = load(file, cfg);
  try {
    return density_matrix<double>(g);
  } catch (const Error& e) {
    throw InputError(file, e);
  }
}

void print_record(std::ostream& os,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
  for (const auto& [key, value] : fields) os << key << '=' << value << '\n';
}

void cmd_entropy(const RunConfig& cfg, std::ostream& os) {
  const std::string& file = cfg.inputs.front();
  const Graph g = load(file, cfg);
  DensityMatrix<double> rho = [&] {
    try {
      return density_matrix<double>(g);
    } catch (const Error& e) {
      throw InputError(file, e);
    }
  }();

  double value = 0;
  double alpha = cfg.alpha;
  std::string measure;
  switch (cfg.measure) {
    case Measure::Tsallis:
      value = tsallis_entropy(rho, EntropicIndex<double>(cfg.alpha));
      measure = "tsallis";
      break;
    case Measure::Renyi:
      value = renyi_entropy(rho, EntropicIndex<double>(cfg.alpha));
      measure = "renyi";
      break;
    case Measure::VonNeumann:
      value = von_neumann_entropy(rho);
      alpha = 1.0;
      measure = "von-neumann";
      break;
  }
  print_record(os, {{"file", file},
                    {"m", std::to_string(g.vertex_count())},
                    {"edge_count", std::to_string(g.edge_count())},
                    {"volume", std::to_string(volume(g))},
                    {"alpha", format_number(alpha)},
                    {"measure", measure},
                    {"value", format_number(value)}});
}

void cmd_divergence(const RunConfig& cfg, std::ostream& os) {
  if (cfg.inputs.size() < 2) {
    throw Error(Errc::InvalidArgument, "divergence needs at least two inputs");
  }
  const EntropicIndex<double> alpha(cfg.alpha);
  std::vector<DensityMatrix<double>> rhos;
  for (const auto& file : cfg.inputs) rhos.push_back(load_density(file, cfg));

  for (std::size_t j = 1; j < rhos.size(); ++j) {
    if (rhos[j].dim() != rhos.front().dim()) {
      std::string sizes;
      for (std::size_t k = 0; k < rhos.size(); ++k) {
        sizes += (k ? ", " : "") + cfg.inputs[k] + " has " + std::to_string(rhos[k].dim());
      }
      throw Error(Errc::DimensionMismatch, "vertex counts differ: " + sizes);
    }
  }

  const auto n = static_cast<Eigen::Index>(rhos.size());
  WeightVector<double> omega = WeightVector<double>::uniform(n);
  if (!cfg.weights.empty()) {
    if (static_cast<Eigen::Index>(cfg.weights.size()) != n) {
      throw Error(Errc::InvalidWeights, std::to_string(cfg.weights.size()) +
                                            " weights for " + std::to_string(n) + " inputs");
    }
    omega = WeightVector<double>(
        Eigen::Map<const Eigen::VectorXd>(cfg.weights.data(), n));
  }

  const auto r = jensen_tsallis_divergence<double>(rhos, omega, alpha);
  print_record(os, {{"n", std::to_string(r.n)},
                    {"alpha", format_number(r.alpha)},
                    {"value", format_number(r.value)},
                    {"upper_bound", format_number(r.upper_bound)},
                    {"tight_bound", format_number(r.tight_bound)},
                    {"normalized", format_number(r.normalized)}});
}

std::vector<std::string> corpus_files(const RunConfig& cfg) {
  std::vector<std::string> files = cfg.inputs;
  if (!cfg.dir.empty()) {
    std::vector<std::string> found;
    for (const auto& entry : fs::directory_iterator(cfg.dir)) {
      if (!entry.is_regular_file()) continue;
      try {
        resolve_format(entry.path(), cfg.format);
      } catch (const Error&) {
        continue;
      }
      found.push_back(entry.path().string());
    }
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  if (files.empty()) throw Error(Errc::InvalidArgument, "pairwise needs --inputs or --dir");
  return files;
}

void cmd_pairwise(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const EntropicIndex<double> alpha(cfg.alpha);
  std::vector<std::string> ids;
  std::vector<DensityMatrix<double>> rhos;
  for (const auto& file : corpus_files(cfg)) {
    try {
      DensityMatrix<double> rho = load_density(file, cfg);
      if (!rhos.empty() && rho.dim() != rhos.front().dim()) {
        throw Error(Errc::DimensionMismatch,
                    file + ": has " + std::to_string(rho.dim()) + " vertices, " + ids.front() +
                        " has " + std::to_string(rhos.front().dim()));
      }
      rhos.push_back(std::move(rho));
      ids.push_back(file);
    } catch (const Error& e) {
      if (!cfg.skip_bad) throw;
      err << "warning: skipping " << e.what() << '\n';
    }
  }
  if (rhos.empty()) throw Error(Errc::InvalidArgument, "no usable inputs");

  const MatrixX<double> d = pairwise_matrix<double>(rhos, alpha, cfg.normalized);
  for (const auto& id : ids) os << ',' << id;
  os << '\n';
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    os << ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < d.cols(); ++j) os << ',' << format_number(d(i, j));
    os << '\n';
  }
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
  const Spectrum<double> mu = spectrum(load_density(cfg.inputs.front(), cfg));
  os << "index,mu\n";
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    os << (i + 1) << ',' << format_number(mu[i]) << '\n';
  }
}

void cmd_figure(const RunConfig& cfg, std::ostream& os) {
  const Eigen::MatrixXd table = figure_table(cfg.alpha_list, cfg.grid);
  os << 'p';
  for (double a : cfg.alpha_list) os << ",H_" << format_number(a);
  os << '\n';
  for (Eigen::Index k = 0; k < table.rows(); ++k) {
    for (Eigen::Index c = 0; c < table.cols(); ++c) {
      os << (c ? "," : "") << format_number(table(k, c));
    }
    os << '\n';
  }
}

void cmd_matrix(const RunConfig& cfg, std::ostream& os) {
  const std::string& file = cfg.inputs.front();
  const Graph g = load(file, cfg);
  MatrixX<double> m;
  if (cfg.kind == "adjacency") {
    m = adjacency_matrix<double>(g).matrix();
  } else if (cfg.kind == "laplacian") {
    m = laplacian_matrix<double>(g).matrix();
  } else {
    try {
      m = density_matrix<double>(g).matrix();
    } catch (const Error& e) {
      throw InputError(file, e);
    }
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << (j ? "," : "") << format_number(m(i, j));
    }
    os << '\n';
  }
}

void add_format(CLI::App* sub, RunConfig& cfg) {
  const std::map<std::string, Format> formats{
      {"auto", Format::Auto}, {"edges", Format::Edges}, {"mtx", Format::Mtx}, {"off", Format::Off}};
  sub->add_option("--format", cfg.format, "Input format (default: by extension)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_flag("--one-based", cfg.one_based, "Edge-list indices start at 1");
}

void add_out(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "Write data here instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quantum Jensen-Tsallis divergence between graph Laplacian densities", "qjt"};
  app.require_subcommand(1, 1);

  auto* entropy = app.add_subcommand("entropy", "Entropy of one graph's Laplacian density");
  entropy->add_option("--input", cfg.inputs, "Graph file")->required()->expected(1);
  const std::map<std::string, Measure> measures{{"tsallis", Measure::Tsallis},
                                                {"renyi", Measure::Renyi},
                                                {"von-neumann", Measure::VonNeumann}};
  entropy->add_option("--measure", cfg.measure, "tsallis | renyi | von-neumann")
      ->transform(CLI::CheckedTransformer(measures, CLI::ignore_case));
  entropy->add_option("--alpha", cfg.alpha, "Entropic index (> 0)");
  add_format(entropy, cfg);
  add_out(entropy, cfg);

  auto* divergence = app.add_subcommand("divergence", "Divergence among n >= 2 graphs");
  divergence->add_option("--inputs", cfg.inputs, "Graph files")->required();
  divergence->add_option("--weights", cfg.weights, "Mixture weights (default uniform)")
      ->delimiter(',');
  divergence->add_option("--alpha", cfg.alpha, "Entropic index (> 0)");
  add_format(divergence, cfg);
  add_out(divergence, cfg);

  auto* pairwise = app.add_subcommand("pairwise", "Pairwise divergence matrix of a corpus");
  pairwise->add_option("--inputs", cfg.inputs, "Graph files");
  pairwise->add_option("--dir", cfg.dir, "Directory of graph files")->check(CLI::ExistingDirectory);
  pairwise->add_option("--alpha", cfg.alpha, "Entropic index (> 0)");
  pairwise->add_flag("--normalized,!--raw", cfg.normalized,
                     "Divide by H_alpha(1/2, 1/2) (default on; --raw disables)");
  pairwise->add_flag("--skip-bad", cfg.skip_bad, "Skip unreadable or mismatched inputs");
  add_format(pairwise, cfg);
  add_out(pairwise, cfg);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Ascending spectrum of the density");
  spectrum_cmd->add_option("--input", cfg.inputs, "Graph file")->required()->expected(1);
  add_format(spectrum_cmd, cfg);
  add_out(spectrum_cmd, cfg);

  auto* figure = app.add_subcommand("figure", "H_alpha of diag(p, 1 - p) over a p grid");
  figure->add_option("--alpha-list", cfg.alpha_list, "Comma-separated indices (>= 0)")
      ->delimiter(',')
      ->required();
  figure->add_option("--grid", cfg.grid, "Number of p points over [0, 1]");
  add_out(figure, cfg);

  auto* matrix = app.add_subcommand("matrix", "Dump adjacency, Laplacian or density as CSV");
  matrix->add_option("--input", cfg.inputs, "Graph file")->required()->expected(1);
  matrix->add_option("--kind", cfg.kind, "adjacency | laplacian | density")
      ->check(CLI::IsMember({"adjacency", "laplacian", "density"}));
  add_format(matrix, cfg);
  add_out(matrix, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::ostringstream data;
  try {
    if (entropy->parsed()) {
      cmd_entropy(cfg, data);
    } else if (divergence->parsed()) {
      cmd_divergence(cfg, data);
    } else if (pairwise->parsed()) {
      cmd_pairwise(cfg, data, err);
    } else if (spectrum_cmd->parsed()) {
      cmd_spectrum(cfg, data);
    } else if (figure->parsed()) {
      cmd_figure(cfg, data);
    } else if (matrix->parsed()) {
      cmd_matrix(cfg, data);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out.empty()) {
    out << data.str();
    return 0;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file || !(file << data.str())) {
    err << "error: cannot write " << cfg.out << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qjt::cli
