#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "graphspectra/io.hpp"
#include "support/oracles.hpp"

using namespace graphspectra;

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& name)
      : path_("/tmp/graphspectra_test_" + name) {}
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }
  void write(const std::string& text) const {
    std::ofstream out(path_, std::ios::binary);
    out << text;
  }
  std::string read() const {
    std::ifstream in(path_, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("doubles survive the 17-digit round trip") {
  const double tricky[] = {1.0 / 3.0,  0.1,    -2.5e-300, 3.0,
                           6.02214e23, 1e-17,  -0.0,      123456.789012345,
                           2.0 / 7.0,  5.0e-7};
  for (double v : tricky) {
    const std::string text = format_sig17(v);
    CHECK(std::stod(text) == v);
    CHECK(text.find(',') == std::string::npos);
  }
  CHECK(format_sig17(3.0) == "3");
}

TEST_CASE("CSV round trip is bit exact") {
  TempFile tmp("table.csv");
  Eigen::MatrixXd m(3, 2);
  m << 1.0 / 3.0, -7.25, 0.1, 1e-300, 9.0, 2.0 / 7.0;
  save_csv(tmp.path(), {"alpha", "beta"}, m);

  const CsvTable table = load_csv(tmp.path());
  REQUIRE(table.header.size() == 2);
  CHECK(table.header[0] == "alpha");
  CHECK(table.header[1] == "beta");
  REQUIRE(table.values.rows() == 3);
  REQUIRE(table.values.cols() == 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(table.values(i, j) == m(i, j));
    }
  }

  // LF endings only.
  const std::string raw = tmp.read();
  CHECK(raw.find('\r') == std::string::npos);
  CHECK(raw.back() == '\n');
}

TEST_CASE("ragged CSV rows are rejected") {
  TempFile tmp("ragged.csv");
  tmp.write("a,b\n1,2\n3\n");
  CHECK_THROWS_AS(load_csv(tmp.path()), Error);

  TempFile bad("nonnum.csv");
  bad.write("a,b\n1,x\n");
  CHECK_THROWS_AS(load_csv(bad.path()), Error);

  CHECK_THROWS_AS(load_csv("/tmp/graphspectra_does_not_exist.csv"), Error);
}

TEST_CASE("edge lists parse one-based pairs with optional weights") {
  TempFile tmp("graph.txt");
  tmp.write(
      "# a comment\n"
      "1 2\n"
      "2 3 0.5\n"
      "\n"
      "3 1 2.0\n");
  const Graph g = load_graph(tmp.path());
  CHECK(g.n_vertices() == 3);
  CHECK(g.adjacency().coeff(0, 1) == 1.0);
  CHECK(g.adjacency().coeff(1, 2) == 0.5);
  CHECK(g.adjacency().coeff(2, 0) == 2.0);
  CHECK(g.adjacency().coeff(0, 2) == 2.0);
}

TEST_CASE("edge list validation") {
  TempFile selfloop("selfloop.txt");
  selfloop.write("1 1\n");
  CHECK_THROWS_AS(load_graph(selfloop.path()), Error);

  TempFile trailing("trailing.txt");
  trailing.write("1 2 1.0 extra\n");
  CHECK_THROWS_AS(load_graph(trailing.path()), Error);

  TempFile conflict("conflict.txt");
  conflict.write("1 2 1.0\n2 1 2.0\n");
  try {
    load_graph(conflict.path());
    FAIL("expected asymmetric_weight");
  } catch (const Error& e) {
    CHECK(e.code() == errc::asymmetric_weight);
  }

  // The same weight listed both ways merges silently.
  TempFile dup("dup.txt");
  dup.write("1 2 1.5\n2 1 1.5\n2 3 1.0\n");
  const Graph g = load_graph(dup.path());
  CHECK(g.adjacency().coeff(0, 1) == 1.5);

  TempFile zero("zero.txt");
  zero.write("0 1\n");
  CHECK_THROWS_AS(load_graph(zero.path()), Error);
}

TEST_CASE("MatrixMarket coordinate graphs") {
  TempFile tmp("graph.mtx");
  tmp.write(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "% comment line\n"
      "3 3 3\n"
      "2 1 1.0\n"
      "3 1 0.25\n"
      "3 2 4.0\n");
  const Graph g = load_graph(tmp.path());
  CHECK(g.n_vertices() == 3);
  CHECK(g.adjacency().coeff(0, 1) == 1.0);
  CHECK(g.adjacency().coeff(0, 2) == 0.25);
  CHECK(g.adjacency().coeff(1, 2) == 4.0);

  // Pattern files weight every edge at one.
  TempFile pat("pattern.mtx");
  pat.write(
      "%%MatrixMarket matrix coordinate pattern symmetric\n"
      "3 3 2\n"
      "2 1\n"
      "3 2\n");
  const Graph gp = load_graph(pat.path());
  CHECK(gp.adjacency().coeff(0, 1) == 1.0);
  CHECK(gp.adjacency().coeff(1, 2) == 1.0);

  TempFile wrongcount("count.mtx");
  wrongcount.write(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "3 3 3\n"
      "2 1 1.0\n");
  CHECK_THROWS_AS(load_graph(wrongcount.path()), Error);

  TempFile notsquare("rect.mtx");
  notsquare.write(
      "%%MatrixMarket matrix coordinate real general\n"
      "3 4 1\n"
      "2 1 1.0\n");
  CHECK_THROWS_AS(load_graph(notsquare.path()), Error);

  TempFile badbanner("banner.mtx");
  badbanner.write("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n");
  CHECK_THROWS_AS(load_graph(badbanner.path()), Error);

  // Explicit format overrides the extension.
  TempFile disguised("edges.mtx");
  disguised.write("1 2\n");
  CHECK_THROWS_AS(load_graph(disguised.path()), Error);
  CHECK(load_graph(disguised.path(), GraphFormat::edgelist).n_vertices() == 2);
}

TEST_CASE("signal sets round-trip with labels") {
  TempFile tmp("signals.csv");
  SignalSet set;
  set.signals = Eigen::MatrixXd(4, 2);
  set.signals << 0.1, 1.0 / 3.0, -2.0, 5e-5, 0.0, 12.75, 3.0, -1e-12;
  set.labels = {"eta0.2_n2_r1", "eta0.2_n2_r2"};
  save_signals(tmp.path(), set);

  const SignalSet back = load_signals(tmp.path());
  REQUIRE(back.count() == 2);
  REQUIRE(back.size() == 4);
  CHECK(back.labels == set.labels);
  CHECK((back.signals - set.signals).norm() == 0.0);

  SignalSet unlabeled = set;
  unlabeled.labels.pop_back();
  CHECK_THROWS_AS(save_signals(tmp.path(), unlabeled), Error);
}

TEST_CASE("config hashing is the reference FNV-1a") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(fnv1a64("bands=7") == fnv1a64("bands=7"));
  CHECK(fnv1a64("bands=7") != fnv1a64("bands=8"));
}
