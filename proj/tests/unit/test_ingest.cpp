#include <doctest.h>

#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>
#include <sstream>

#include "hypercp/ingest.hpp"

using namespace hypercp;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  auto d = fs::temp_directory_path() / ("hypercp_ingest_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("edge list: labels, comments and weights") {
  std::istringstream in(
      "% a comment\n"
      "a b c\n"
      "\n"
      "c d # w=2.5\n"
      "b a c   \n");
  auto g = read_edge_list(in);
  CHECK(g.labels == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(g.graph.num_nodes() == 4);
  // duplicate {a,b,c} merges, weights sum
  CHECK(g.graph.num_edges() == 2);
  CHECK(g.graph.weight(0) == 2.0);
  CHECK(g.graph.weight(1) == 2.5);
  CHECK(g.graph.weighted());
}

TEST_CASE("edge list: errors carry the line number") {
  CHECK(error_of("a b\nc\n").find("line 2") != std::string::npos);
  CHECK(error_of("a b\n\na b # w=x\n").find("line 3") != std::string::npos);
  CHECK(error_of("a b # w=-1\n").find("line 1") != std::string::npos);
  CHECK(error_of("a b # weight 2\n").find("line 1") != std::string::npos);
  CHECK(error_of("a a\n").find("line 1") != std::string::npos);
  CHECK_FALSE(error_of("% only comments\n").empty());
}

TEST_CASE("edge list: write then read round trip") {
  std::istringstream in("x y z # w=0.1\ny w\nz w x # w=3\n");
  auto g = read_edge_list(in);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  auto g2 = read_edge_list(back);
  CHECK(g2.labels == g.labels);
  CHECK(g2.graph == g.graph);
}

TEST_CASE("edge list file: plain and gzip input give the same result") {
  auto dir = scratch_dir();
  const std::string text = "1 2 3\n3 4 # w=2\n4 5 1\n";
  auto plain = dir / "h.txt";
  std::ofstream(plain) << text;
  auto gzpath = dir / "h.txt.gz";
  gzFile gz = gzopen(gzpath.c_str(), "wb");
  REQUIRE(gz != nullptr);
  gzwrite(gz, text.data(), static_cast<unsigned>(text.size()));
  gzclose(gz);
  auto a = read_edge_list_file(plain.string());
  auto b = read_edge_list_file(gzpath.string());
  CHECK(a.graph == b.graph);
  CHECK(a.labels == b.labels);
  CHECK_THROWS_AS(read_edge_list_file((dir / "missing.txt").string()), Error);
  fs::remove_all(dir);
}

TEST_CASE("simplex stream: merge, singletons and relabeling") {
  std::istringstream nv("3\n2\n1\n3\n2\n");
  std::istringstream sx("10\n2\n7\n2\n10\n7\n2\n7\n10\n7\n7\n");
  std::istringstream tm("1\n2\n3\n4\n5\n");
  auto r = read_simplex_stream(nv, sx, &tm);
  CHECK(r.simplices == 5);
  CHECK(r.dropped_singletons == 2);  // {7} and {7,7}
  CHECK(r.hypergraph.labels == std::vector<std::string>{"2", "7", "10"});
  const auto& g = r.hypergraph.graph;
  REQUIRE(g.num_edges() == 2);
  // {2,7,10} twice, {2,10} once
  CHECK(g.edge_size(0) == 3);
  CHECK(g.weight(0) == 2.0);
  CHECK(g.edge_size(1) == 2);
  CHECK(g.weight(1) == 1.0);
}

TEST_CASE("simplex stream: length mismatches are errors") {
  {
    std::istringstream nv("2\n2\n"), sx("1\n2\n3\n");
    CHECK_THROWS_AS(read_simplex_stream(nv, sx), Error);
  }
  {
    std::istringstream nv("2\n2\n"), sx("1\n2\n3\n4\n5\n");
    CHECK_THROWS_AS(read_simplex_stream(nv, sx), Error);
  }
  {
    std::istringstream nv("2\n"), sx("1\n2\n"), tm("1\n2\n");
    CHECK_THROWS_AS(read_simplex_stream(nv, sx, &tm), Error);
  }
  {
    std::istringstream nv("2\nx\n"), sx("1\n2\n");
    CHECK_THROWS_AS(read_simplex_stream(nv, sx), Error);
  }
  {
    std::istringstream nv("0\n"), sx("");
    CHECK_THROWS_AS(read_simplex_stream(nv, sx), Error);
  }
}

TEST_CASE("property: simplex stream ignores simplex order and keeps total weight") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> size(1, 4), label(0, 9);
  std::vector<std::vector<int>> simplices(60);
  for (auto& s : simplices) {
    s.resize(static_cast<std::size_t>(size(rng)));
    for (int& v : s) v = label(rng);
  }
  auto render = [](const std::vector<std::vector<int>>& ss) {
    std::ostringstream nv, sx;
    for (const auto& s : ss) {
      nv << s.size() << '\n';
      for (int v : s) sx << v << '\n';
    }
    return std::pair{nv.str(), sx.str()};
  };
  auto [nv1, sx1] = render(simplices);
  std::istringstream a1(nv1), b1(sx1);
  auto r1 = read_simplex_stream(a1, b1);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(simplices.begin(), simplices.end(), rng);
    auto [nv2, sx2] = render(simplices);
    std::istringstream a2(nv2), b2(sx2);
    auto r2 = read_simplex_stream(a2, b2);
    CHECK(r2.hypergraph.graph == r1.hypergraph.graph);
    CHECK(r2.hypergraph.labels == r1.hypergraph.labels);
  }
  double total = 0.0;
  for (double w : r1.hypergraph.graph.weights()) total += w;
  CHECK(total == static_cast<double>(r1.simplices - r1.dropped_singletons));
}

TEST_CASE("core set: resolves labels and reports unknown ones") {
  std::vector<std::string> labels{"a", "b", "c"};
  std::istringstream in("% core\nc a zz\na\n");
  auto r = read_core_set(in, labels);
  CHECK(r.nodes == std::vector<NodeId>{2, 0});
  CHECK(r.unmatched == std::vector<std::string>{"zz"});
}
