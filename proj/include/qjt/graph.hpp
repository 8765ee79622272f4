#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qjt {

using VertexId = std::uint32_t;

/// Unordered vertex pair, stored with first < second.
struct Edge {
  VertexId first = 0;
  VertexId second = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph: vertex count plus a sorted, duplicate-free edge
/// set. Immutable once built.
class Graph {
 public:
  /// Throws SelfLoop or IndexOutOfRange. Duplicate edges are folded; the
  /// number dropped is written to `duplicates_dropped` when given.
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::size_t* duplicates_dropped = nullptr);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

enum class Severity { Info, Warning, Error };

struct Issue {
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const noexcept;
  bool has(Severity s) const noexcept;
  void add(Severity s, std::string message);
};

/// Whitespace-separated "i j" pairs, '#' comments, optional leading
/// "m <count>" header. Without the header the vertex count is max index + 1.
Graph parse_edge_list(std::istream& in, bool one_based = false,
                      ValidationReport* notices = nullptr);

/// "%%MatrixMarket matrix coordinate pattern symmetric", 1-based entries.
Graph parse_matrix_market(std::istream& in, ValidationReport* notices = nullptr);

/// Face-boundary vertex adjacency of an OFF mesh. Coordinates are skipped.
Graph parse_off_mesh(std::istream& in, ValidationReport* notices = nullptr);

/// Canonical edge list: "m <count>" header then ascending 0-based pairs.
void write_edge_list(std::ostream& out, const Graph& g);

ValidationReport validate(const Graph& g);

std::vector<std::size_t> degrees(const Graph& g);

/// Number of connected components, isolated vertices included.
std::size_t component_count(const Graph& g);

}  // namespace qjt
