#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qjt/graph.hpp"

namespace qjt::cli {

enum class Format { Auto, Edges, Mtx, Off };

/// Maps Auto to a concrete format by extension: .edges/.txt, .mtx, .off.
Format resolve_format(const std::filesystem::path& path, Format requested);

Graph load_graph(const std::filesystem::path& path, Format format, bool one_based);

/// Runs one command. `args` excludes the program name. Data goes to `out`
/// (or the --out file), diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rows of (p, H_a1(diag(p, 1 - p)), H_a2(...), ...) for p on a uniform grid
/// over [0, 1]. alpha = 0 is allowed here and evaluates tr(rho^0) - 1.
Eigen::MatrixXd figure_table(const std::vector<double>& alphas, std::size_t grid);

/// printf "%.12g".
std::string format_number(double x);

}  // namespace qjt::cli
