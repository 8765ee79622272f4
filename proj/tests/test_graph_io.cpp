#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "oracles/random_graphs.hpp"
#include "qjt/error.hpp"
#include "qjt/graph.hpp"

using namespace qjt;

namespace {

Graph edges_from(const std::string& text, bool one_based = false,
                 ValidationReport* notes = nullptr) {
  std::istringstream in(text);
  return parse_edge_list(in, one_based, notes);
}

Graph mtx_from(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_market(in);
}

Graph off_from(const std::string& text) {
  std::istringstream in(text);
  return parse_off_mesh(in);
}

template <typename Fn>
Errc error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qjt::Error");
  return Errc::InvalidArgument;
}

const Graph kP3(3, std::vector<Edge>{{0, 1}, {1, 2}});
const std::string kBanner = "%%MatrixMarket matrix coordinate pattern symmetric\n";

}  // namespace

TEST_CASE("edge list: path P3") {
  CHECK(edges_from("0 1\n1 2") == kP3);
  CHECK(edges_from("1 2\n2 3", true) == kP3);
}

TEST_CASE("edge list: duplicates fold with a notice") {
  ValidationReport notes;
  Graph g = edges_from("0 1\n1 0\n0 1", false, &notes);
  CHECK(g == Graph(2, std::vector<Edge>{{0, 1}}));
  REQUIRE(notes.issues.size() == 1);
  CHECK(notes.issues[0].severity == Severity::Info);
  CHECK(notes.ok());
}

TEST_CASE("edge list: comments, blank lines and header") {
  Graph g = edges_from("# a comment\n\nm 5\n0 1\n   \n# more\n3 4\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list: errors") {
  CHECK(error_of([] { edges_from("0 x\n"); }) == Errc::MalformedLine);
  CHECK(error_of([] { edges_from("0 1 2\n"); }) == Errc::MalformedLine);
  CHECK(error_of([] { edges_from("0\n"); }) == Errc::MalformedLine);
  CHECK(error_of([] { edges_from("2 2\n"); }) == Errc::SelfLoop);
  CHECK(error_of([] { edges_from("m 2\n0 2\n"); }) == Errc::IndexOutOfRange);
  CHECK(error_of([] { edges_from("0 1\n", true); }) == Errc::IndexOutOfRange);
  CHECK(error_of([] { edges_from(""); }) == Errc::EmptyInput);
  CHECK(error_of([] { edges_from("# only comments\n\n"); }) == Errc::EmptyInput);
  CHECK(error_of([] { edges_from("0 1\nm 3\n"); }) == Errc::MalformedLine);
}

TEST_CASE("matrix market: path P3") {
  CHECK(mtx_from(kBanner + "3 3 2\n2 1\n3 2\n") == kP3);
  CHECK(mtx_from("%%MatrixMarket MATRIX Coordinate PATTERN Symmetric\n% c\n3 3 2\n1 2\n2 3\n") ==
        kP3);
}

TEST_CASE("matrix market: errors") {
  CHECK(error_of([] { mtx_from("%%MatrixMarket matrix coordinate real symmetric\n3 3 0\n"); }) ==
        Errc::UnsupportedHeader);
  CHECK(error_of([] { mtx_from("%%MatrixMarket matrix coordinate pattern general\n3 3 0\n"); }) ==
        Errc::UnsupportedHeader);
  CHECK(error_of([] { mtx_from("3 3 1\n1 2\n"); }) == Errc::UnsupportedHeader);
  CHECK(error_of([] { mtx_from(kBanner + "3 4 1\n1 2\n"); }) == Errc::NonSquare);
  CHECK(error_of([] { mtx_from(kBanner + "3 3 1\n2 2\n"); }) == Errc::SelfLoop);
  CHECK(error_of([] { mtx_from(kBanner + "3 3 1\n4 1\n"); }) == Errc::IndexOutOfRange);
  CHECK(error_of([] { mtx_from(kBanner + "3 3 2\n2 1\n"); }) == Errc::TruncatedFile);
}

TEST_CASE("off: single triangle gives K3") {
  Graph g = off_from("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  CHECK(g == Graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("off: shared edge stored once") {
  Graph g = off_from("OFF\n# two triangles\n4 2 5\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n"
                     "3 0 1 2\n3 1 3 2 255 0 0\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);
}

TEST_CASE("off: counts on the magic line and quad faces") {
  Graph g = off_from("OFF 4 1 4\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n");
  CHECK(g == Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

TEST_CASE("off: errors") {
  CHECK(error_of([] { off_from("PLY\n3 1 0\n"); }) == Errc::MissingMagic);
  CHECK(error_of([] { off_from("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n2 0 1\n"); }) ==
        Errc::FaceArityTooSmall);
  CHECK(error_of([] { off_from("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n"); }) ==
        Errc::IndexOutOfRange);
  CHECK(error_of([] { off_from("OFF\n3 1 0\n0 0 0\n1 0 0\n"); }) == Errc::TruncatedFile);
  CHECK(error_of([] { off_from("OFF\n3 2 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n"); }) ==
        Errc::TruncatedFile);
  CHECK(error_of([] { off_from(""); }) == Errc::EmptyInput);
}

TEST_CASE("validate") {
  CHECK(validate(kP3).ok());
  CHECK(validate(kP3).issues.empty());

  auto isolated = validate(Graph(3, std::vector<Edge>{{0, 1}}));
  CHECK(isolated.ok());
  REQUIRE(isolated.issues.size() == 1);
  CHECK(isolated.issues[0].severity == Severity::Warning);
  CHECK(isolated.issues[0].message.find("vertex 2") != std::string::npos);

  auto empty = validate(Graph(2, std::vector<Edge>{}));
  CHECK_FALSE(empty.ok());

  auto split = validate(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}}));
  CHECK(split.ok());
  CHECK(split.has(Severity::Warning));
}

TEST_CASE("property: canonical edge list round-trips") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 15);
    std::stringstream s;
    write_edge_list(s, g);
    CHECK(parse_edge_list(s) == g);
  }
}

TEST_CASE("property: duplicating every edge changes nothing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 15);
    std::string once = "m " + std::to_string(g.vertex_count()) + "\n";
    std::string twice = once;
    for (const auto& e : g.edges()) {
      const std::string a = std::to_string(e.first), b = std::to_string(e.second);
      once += a + " " + b + "\n";
      twice += a + " " + b + "\n" + b + " " + a + "\n";
    }
    CHECK(edges_from(once) == edges_from(twice));
  }
}

TEST_CASE("property: closed triangle meshes have |E| <= 3 nF") {
  // Torus grids: every edge is shared by exactly two triangles, so |E| = 3nF/2.
  for (int rows = 3; rows <= 6; ++rows) {
    for (int cols = 3; cols <= 6; ++cols) {
      std::string off = "OFF\n" + std::to_string(rows * cols) + " " +
                        std::to_string(2 * rows * cols) + " 0\n";
      for (int v = 0; v < rows * cols; ++v) off += "0 0 0\n";
      auto id = [&](int r, int c) { return ((r + rows) % rows) * cols + (c + cols) % cols; };
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          off += "3 " + std::to_string(id(r, c)) + " " + std::to_string(id(r, c + 1)) + " " +
                 std::to_string(id(r + 1, c)) + "\n";
          off += "3 " + std::to_string(id(r, c + 1)) + " " + std::to_string(id(r + 1, c + 1)) +
                 " " + std::to_string(id(r + 1, c)) + "\n";
        }
      }
      const Graph g = off_from(off);
      const std::size_t faces = 2 * static_cast<std::size_t>(rows * cols);
      CHECK(g.edge_count() < 3 * faces);
      CHECK(2 * g.edge_count() == 3 * faces);
    }
  }
  // Disjoint triangles share nothing: equality.
  const Graph g = off_from("OFF\n6 2 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n"
                           "3 0 1 2\n3 3 4 5\n");
  CHECK(g.edge_count() == 6);
}

TEST_CASE("component count agrees with breadth-first search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 10, 0.25);
    CHECK((component_count(g) == 1) == oracle::connected_bfs(g));
  }
}
