#include "qjt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "qjt/error.hpp"

namespace qjt {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string at_line(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Reads lines, dropping trailing '\r' and counting line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

struct RawEdge {
  long long a;
  long long b;
  std::size_t line_no;
};

Graph build(std::size_t m, const std::vector<RawEdge>& raw, ValidationReport* notices) {
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    if (e.a == e.b) {
      throw Error(Errc::SelfLoop,
                  at_line(e.line_no) + "self-loop on vertex " + std::to_string(e.a));
    }
    if (e.a < 0 || e.b < 0 || static_cast<unsigned long long>(e.a) >= m ||
        static_cast<unsigned long long>(e.b) >= m) {
      throw Error(Errc::IndexOutOfRange,
                  at_line(e.line_no) + "edge (" + std::to_string(e.a) + ", " +
                      std::to_string(e.b) + ") outside [0, " + std::to_string(m) + ")");
    }
    edges.emplace_back(static_cast<VertexId>(e.a), static_cast<VertexId>(e.b));
  }
  std::size_t dropped = 0;
  Graph g(m, edges, &dropped);
  if (dropped > 0 && notices != nullptr) {
    notices->add(Severity::Info,
                 "folded " + std::to_string(dropped) + " duplicate edge(s)");
  }
  return g;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges,
             std::size_t* duplicates_dropped)
    : vertex_count_(vertex_count), edges_(edges.begin(), edges.end()) {
  if (vertex_count_ == 0) {
    throw Error(Errc::InvalidArgument, "graph must have at least one vertex");
  }
  for (const auto& e : edges_) {
    if (e.first == e.second) {
      throw Error(Errc::SelfLoop, "self-loop on vertex " + std::to_string(e.first));
    }
    if (e.second >= vertex_count_) {
      throw Error(Errc::IndexOutOfRange,
                  "vertex " + std::to_string(e.second) + " outside [0, " +
                      std::to_string(vertex_count_) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto last = std::unique(edges_.begin(), edges_.end());
  if (duplicates_dropped != nullptr) {
    *duplicates_dropped = static_cast<std::size_t>(edges_.end() - last);
  }
  edges_.erase(last, edges_.end());
}

bool ValidationReport::ok() const noexcept { return !has(Severity::Error); }

bool ValidationReport::has(Severity s) const noexcept {
  return std::any_of(issues.begin(), issues.end(),
                     [s](const Issue& i) { return i.severity == s; });
}

void ValidationReport::add(Severity s, std::string message) {
  issues.push_back({s, std::move(message)});
}

Graph parse_edge_list(std::istream& in, bool one_based, ValidationReport* notices) {
  LineReader reader(in);
  std::string line;
  std::optional<std::size_t> declared;
  std::vector<RawEdge> raw;
  bool seen_content = false;
  const long long shift = one_based ? 1 : 0;

  while (reader.next(line)) {
    auto tokens = split(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const std::size_t n = reader.line_no();

    if (tokens.front() == "m") {
      if (seen_content) {
        throw Error(Errc::MalformedLine,
                    at_line(n) + "vertex-count header must precede all edges");
      }
      auto count = tokens.size() == 2 ? to_integer(tokens[1]) : std::nullopt;
      if (!count || *count <= 0) {
        throw Error(Errc::MalformedLine, at_line(n) + "expected \"m <count>\"");
      }
      declared = static_cast<std::size_t>(*count);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw Error(Errc::MalformedLine,
                  at_line(n) + "expected two vertex indices, got " +
                      std::to_string(tokens.size()) + " token(s)");
    }
    auto a = to_integer(tokens[0]);
    auto b = to_integer(tokens[1]);
    if (!a || !b) {
      throw Error(Errc::MalformedLine, at_line(n) + "non-integer vertex index");
    }
    raw.push_back({*a - shift, *b - shift, n});
  }

  if (!seen_content) throw Error(Errc::EmptyInput, "edge list is empty");

  std::size_t m = 0;
  if (declared) {
    m = *declared;
  } else {
    long long max_index = -1;
    for (const auto& e : raw) {
      if (e.a < 0 || e.b < 0) {
        throw Error(Errc::IndexOutOfRange,
                    at_line(e.line_no) + "negative vertex index");
      }
      max_index = std::max({max_index, e.a, e.b});
    }
    m = static_cast<std::size_t>(max_index + 1);
  }
  return build(m, raw, notices);
}

Graph parse_matrix_market(std::istream& in, ValidationReport* notices) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw Error(Errc::EmptyInput, "Matrix Market file is empty");

  auto banner = split(line);
  if (banner.empty() || lower(banner[0]) != "%%matrixmarket") {
    throw Error(Errc::UnsupportedHeader, "missing %%MatrixMarket banner");
  }
  if (banner.size() != 5 || lower(banner[1]) != "matrix" ||
      lower(banner[2]) != "coordinate" || lower(banner[3]) != "pattern" ||
      lower(banner[4]) != "symmetric") {
    throw Error(Errc::UnsupportedHeader,
                "only \"matrix coordinate pattern symmetric\" is supported, got \"" +
                    line + "\"");
  }

  std::optional<std::size_t> m;
  std::size_t expected = 0;
  std::vector<RawEdge> raw;
  while (reader.next(line)) {
    auto tokens = split(line);
    if (tokens.empty() || tokens.front().front() == '%') continue;
    const std::size_t n = reader.line_no();
    if (!m) {
      if (tokens.size() != 3) {
        throw Error(Errc::MalformedLine, at_line(n) + "expected size line \"rows cols nnz\"");
      }
      auto rows = to_integer(tokens[0]);
      auto cols = to_integer(tokens[1]);
      auto nnz = to_integer(tokens[2]);
      if (!rows || !cols || !nnz || *rows <= 0 || *cols <= 0 || *nnz < 0) {
        throw Error(Errc::MalformedLine, at_line(n) + "invalid size line");
      }
      if (*rows != *cols) {
        throw Error(Errc::NonSquare, at_line(n) + "matrix is " + std::to_string(*rows) +
                                         "x" + std::to_string(*cols));
      }
      m = static_cast<std::size_t>(*rows);
      expected = static_cast<std::size_t>(*nnz);
      raw.reserve(expected);
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(Errc::MalformedLine, at_line(n) + "pattern entries have two indices");
    }
    auto a = to_integer(tokens[0]);
    auto b = to_integer(tokens[1]);
    if (!a || !b) throw Error(Errc::MalformedLine, at_line(n) + "non-integer index");
    if (raw.size() == expected) {
      throw Error(Errc::MalformedLine, at_line(n) + "more entries than declared");
    }
    raw.push_back({*a - 1, *b - 1, n});
  }
  if (!m) throw Error(Errc::TruncatedFile, "missing size line");
  if (raw.size() != expected) {
    throw Error(Errc::TruncatedFile, "expected " + std::to_string(expected) +
                                         " entries, found " + std::to_string(raw.size()));
  }
  return build(*m, raw, notices);
}

Graph parse_off_mesh(std::istream& in, ValidationReport* notices) {
  LineReader reader(in);
  std::string line;

  // Yields the tokens of the next non-blank, non-comment line.
  auto next_tokens = [&](std::vector<std::string_view>& tokens) {
    while (reader.next(line)) {
      std::string_view view(line);
      if (auto hash = view.find('#'); hash != std::string_view::npos) {
        view = view.substr(0, hash);
      }
      tokens = split(view);
      if (!tokens.empty()) return true;
    }
    return false;
  };

  std::vector<std::string_view> tokens;
  if (!next_tokens(tokens)) throw Error(Errc::EmptyInput, "OFF file is empty");
  if (tokens.front() != "OFF") throw Error(Errc::MissingMagic, "missing OFF magic");
  // Some writers put the counts on the magic line.
  tokens.erase(tokens.begin());
  if (tokens.empty() && !next_tokens(tokens)) {
    throw Error(Errc::TruncatedFile, "missing vertex/face counts");
  }
  if (tokens.size() < 2) {
    throw Error(Errc::MalformedLine, at_line(reader.line_no()) + "expected \"nV nF nE\"");
  }
  auto nv = to_integer(tokens[0]);
  auto nf = to_integer(tokens[1]);
  if (!nv || !nf || *nv <= 0 || *nf < 0) {
    throw Error(Errc::MalformedLine, at_line(reader.line_no()) + "invalid counts");
  }

  for (long long v = 0; v < *nv; ++v) {
    if (!next_tokens(tokens)) {
      throw Error(Errc::TruncatedFile, "expected " + std::to_string(*nv) +
                                           " vertices, found " + std::to_string(v));
    }
    if (tokens.size() < 3) {
      throw Error(Errc::MalformedLine, at_line(reader.line_no()) + "vertex needs 3 coordinates");
    }
  }

  std::vector<RawEdge> raw;
  std::size_t degenerate = 0;
  for (long long f = 0; f < *nf; ++f) {
    if (!next_tokens(tokens)) {
      throw Error(Errc::TruncatedFile, "expected " + std::to_string(*nf) +
                                           " faces, found " + std::to_string(f));
    }
    const std::size_t n = reader.line_no();
    auto k = to_integer(tokens[0]);
    if (!k) throw Error(Errc::MalformedLine, at_line(n) + "non-integer face arity");
    if (*k < 3) {
      throw Error(Errc::FaceArityTooSmall,
                  at_line(n) + "face has " + std::to_string(*k) + " vertices");
    }
    // Anything after the k indices is per-face color and is ignored.
    if (tokens.size() < static_cast<std::size_t>(*k) + 1) {
      throw Error(Errc::TruncatedFile, at_line(n) + "face lists fewer indices than its arity");
    }
    std::vector<long long> ring;
    ring.reserve(static_cast<std::size_t>(*k));
    for (long long i = 1; i <= *k; ++i) {
      auto idx = to_integer(tokens[static_cast<std::size_t>(i)]);
      if (!idx) throw Error(Errc::MalformedLine, at_line(n) + "non-integer vertex index");
      ring.push_back(*idx);
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      long long a = ring[i];
      long long b = ring[(i + 1) % ring.size()];
      if (a == b) {
        ++degenerate;
        continue;
      }
      raw.push_back({a, b, n});
    }
  }

  if (degenerate > 0 && notices != nullptr) {
    notices->add(Severity::Warning, "skipped " + std::to_string(degenerate) +
                                        " repeated vertex pair(s) on degenerate faces");
  }
  return build(static_cast<std::size_t>(*nv), raw, notices);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "m " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++d[e.first];
    ++d[e.second];
  }
  return d;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t component_count(const Graph& g) {
  DisjointSets sets(g.vertex_count());
  std::size_t count = g.vertex_count();
  for (const auto& e : g.edges()) {
    if (sets.unite(e.first, e.second)) --count;
  }
  return count;
}

ValidationReport validate(const Graph& g) {
  ValidationReport report;
  if (g.edge_count() == 0) {
    report.add(Severity::Error, "graph has no edges; its Laplacian density is undefined");
    return report;
  }
  auto d = degrees(g);
  std::size_t isolated = 0;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d[v] == 0) {
      ++isolated;
      report.add(Severity::Warning, "vertex " + std::to_string(v) + " is isolated");
    }
  }
  // Isolated vertices are already reported; only flag a split edge set.
  if (component_count(g) - isolated > 1) {
    report.add(Severity::Warning,
               "graph is disconnected (" + std::to_string(component_count(g) - isolated) +
                   " non-trivial components); the second density eigenvalue is zero");
  }
  return report;
}

}  // namespace qjt
