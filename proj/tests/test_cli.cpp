// End-to-end checks of the command-line driver. The binary path arrives
// as the first program argument (wired up by the build).

#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "graphspectra/graph.hpp"
#include "graphspectra/io.hpp"
#include "graphspectra/signal_model.hpp"
#include "graphspectra/spectrum.hpp"
#include "json.hpp"

using namespace graphspectra;

namespace {

std::string g_cli;
std::filesystem::path g_dir;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[512];
  while (fgets(buf, sizeof(buf), pipe) != nullptr) output += buf;
  const int status = pclose(pipe);
  RunResult result;
  result.output = output;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string path_of(const std::string& name) { return (g_dir / name).string(); }

void write_path_graph(const std::string& file, int n) {
  std::ofstream out(file, std::ios::binary);
  for (int i = 1; i < n; ++i) out << i << " " << i + 1 << "\n";
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return build_graph(n, edges);
}

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

double parse_summary(const std::string& output, const std::string& key) {
  const auto pos = output.find(key);
  REQUIRE(pos != std::string::npos);
  return std::stod(output.substr(pos + key.size()));
}

}  // namespace

TEST_CASE("load reports counts and validates") {
  const std::string graph = path_of("path.txt");
  write_path_graph(graph, 10);
  const RunResult r = run_cli("load --graph " + graph);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("vertices: 10") != std::string::npos);
  CHECK(r.output.find("edges: 9") != std::string::npos);
  CHECK(r.output.find("connected: yes") != std::string::npos);
}

TEST_CASE("exit codes distinguish config, data and usage errors") {
  CHECK(run_cli("load --graph " + path_of("missing.txt")).exit_code == 3);
  CHECK(run_cli("design --family nosuch --out " + path_of("d0")).exit_code == 2);
  CHECK(run_cli("design --family sosks --bands 10 --pivot 5 --lambda-max 2 --out " +
                path_of("d1"))
            .exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("design writes a tight kernel table and metadata") {
  const std::string dir = path_of("design_umt");
  const RunResult r =
      run_cli("design --family umt --bands 5 --lambda-max 2 --out " + dir);
  REQUIRE(r.exit_code == 0);

  const CsvTable table = load_csv(dir + "/kernels.csv");
  REQUIRE(table.header.size() == 7);
  CHECK(table.header.front() == "lambda");
  CHECK(table.header.back() == "G");
  REQUIRE(table.values.rows() == 2001);
  CHECK(table.values(0, 0) == 0.0);
  CHECK(table.values(2000, 0) == doctest::Approx(2.0));
  CHECK((table.values.col(6).array() - 1.0).abs().maxCoeff() < 1e-12);

  const nlohmann::json meta = nlohmann::json::parse(slurp(dir + "/design.json"));
  CHECK(meta.at("family") == "umt");
  CHECK(meta.at("bands") == 5);
  CHECK(meta.at("tight") == true);
  CHECK(meta.at("frame_bounds").at("max_deviation_from_one").get<double>() < 1e-12);
  CHECK(meta.contains("config_hash"));
  CHECK(meta.contains("gamma"));

  const std::string dir2 = path_of("design_umt_rerun");
  REQUIRE(run_cli("design --family umt --bands 5 --lambda-max 2 --out " + dir2)
              .exit_code == 0);
  CHECK(slurp(dir + "/kernels.csv") == slurp(dir2 + "/kernels.csv"));
  CHECK(slurp(dir + "/design.json") == slurp(dir2 + "/design.json"));
}

TEST_CASE("spectrum matches the library eigenvalues") {
  const std::string graph = path_of("path30.txt");
  write_path_graph(graph, 30);
  const std::string out = path_of("spectrum.csv");
  REQUIRE(run_cli("spectrum --graph " + graph + " --out " + out).exit_code == 0);

  const Spectrum spec =
      full_spectrum(Laplacian(path_graph(30), LaplacianKind::combinatorial));
  const CsvTable table = load_csv(out);
  REQUIRE(table.values.rows() == 30);
  for (int l = 0; l < 30; ++l) {
    CHECK(table.values(l, 1) == doctest::Approx(spec.eigenvalues(l)).epsilon(1e-12));
  }
}

TEST_CASE("esd output sums to one for generated ensembles") {
  const std::string graph = path_of("path30.txt");
  write_path_graph(graph, 30);
  const std::string out = path_of("esd.csv");
  const RunResult direct = run_cli("esd --graph " + graph +
                                   " --eta 0.2 --realizations 4 --seed 9 --out " + out);
  REQUIRE(direct.exit_code == 0);
  CHECK(parse_summary(direct.output, "sum: ") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(load_csv(out).values.rows() == 30);

  const RunResult banded =
      run_cli("esd --graph " + graph +
              " --eta 0.2 --realizations 4 --seed 9 --na 12 --mode cheb --order 60 --out " +
              path_of("esd_banded.csv"));
  REQUIRE(banded.exit_code == 0);
  CHECK(parse_summary(banded.output, "sum: ") == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(load_csv(path_of("esd_banded.csv")).values.rows() == 12);
}

TEST_CASE("warp output is a nondecreasing map onto the spectrum") {
  const std::string graph = path_of("path30.txt");
  write_path_graph(graph, 30);
  const std::string out = path_of("warp.csv");
  REQUIRE(run_cli("warp --graph " + graph +
                  " --warp spectrum --out " + out)
              .exit_code == 0);
  const CsvTable table = load_csv(out);
  REQUIRE(table.values.rows() == 2001);
  CHECK(table.values(0, 1) == 0.0);
  double prev = -1.0;
  for (int i = 0; i < table.values.rows(); ++i) {
    CHECK(table.values(i, 1) >= prev - 1e-12);
    prev = table.values(i, 1);
  }
  const Spectrum spec =
      full_spectrum(Laplacian(path_graph(30), LaplacianKind::combinatorial));
  CHECK(table.values(2000, 1) == doctest::Approx(spec.lambda_max()).epsilon(1e-9));
}

TEST_CASE("decompose then synth reproduces the input signal") {
  const std::string graph = path_of("path30.txt");
  write_path_graph(graph, 30);

  const Graph g = path_graph(30);
  SignalSpec spec;
  spec.pairs = {{0.3, 2}};
  spec.realizations = 2;
  spec.seed = 5;
  const SignalSet set = make_sets(g, spec);
  const std::string signals = path_of("signals.csv");
  save_signals(signals, set);

  const std::string coeffs = path_of("coeffs.csv");
  REQUIRE(run_cli("decompose --graph " + graph +
                  " --family bspline --bands 4 --signals " + signals +
                  " --signal-index 1 --out " + coeffs)
              .exit_code == 0);
  const CsvTable ctable = load_csv(coeffs);
  REQUIRE(ctable.values.rows() == 4);
  REQUIRE(ctable.values.cols() == 31);

  const std::string rec = path_of("reconstructed.csv");
  REQUIRE(run_cli("synth --graph " + graph +
                  " --family bspline --bands 4 --coeffs " + coeffs + " --out " + rec)
              .exit_code == 0);
  const CsvTable rtable = load_csv(rec);
  REQUIRE(rtable.values.rows() == 30);
  for (int v = 0; v < 30; ++v) {
    CHECK(rtable.values(v, 1) == doctest::Approx(set.signals(v, 1)).epsilon(1e-10));
  }
}

TEST_CASE("bundled equi-energy experiment is near uniform") {
  const std::string dir = path_of("exp_ee");
  REQUIRE(run_cli("experiment equi-energy --out " + dir).exit_code == 0);
  const CsvTable table = load_csv(dir + "/equi_energy.csv");
  REQUIRE(table.values.rows() == 7);
  CHECK((table.values.col(1).array() - 1.0 / 7.0).abs().maxCoeff() < 0.03);
  const nlohmann::json report = nlohmann::json::parse(slurp(dir + "/report.json"));
  CHECK(report.at("max_deviation").get<double>() < 0.03);
  CHECK(report.contains("config_hash"));
}

TEST_CASE("bundled noise sweep is monotone and deterministic") {
  const std::string dir = path_of("exp_ns");
  REQUIRE(run_cli("experiment noise-sweep --out " + dir).exit_code == 0);
  const nlohmann::json report = nlohmann::json::parse(slurp(dir + "/report.json"));
  CHECK(report.at("distances_nonincreasing") == true);

  const CsvTable table = load_csv(dir + "/noise_sweep.csv");
  REQUIRE(table.values.rows() == 5);
  for (int i = 1; i < table.values.rows(); ++i) {
    CHECK(table.values(i, 1) <= table.values(i - 1, 1) + 1e-12);
  }

  const std::string dir2 = path_of("exp_ns_rerun");
  REQUIRE(run_cli("experiment noise-sweep --out " + dir2).exit_code == 0);
  CHECK(slurp(dir + "/noise_sweep.csv") == slurp(dir2 + "/noise_sweep.csv"));
  CHECK(slurp(dir + "/report.json") == slurp(dir2 + "/report.json"));
}

TEST_CASE("bundled adapted-design experiment orders the band edges") {
  const std::string dir = path_of("exp_mn");
  REQUIRE(run_cli("experiment minnesota --out " + dir).exit_code == 0);
  const nlohmann::json report = nlohmann::json::parse(slurp(dir + "/report.json"));
  CHECK(report.at("f2_edge_below_f1") == true);
  const double f1 = report.at("first_band_edge").at("f1").get<double>();
  const double f2 = report.at("first_band_edge").at("f2").get<double>();
  CHECK(f2 < f1);

  const CsvTable warps = load_csv(dir + "/warps.csv");
  REQUIRE(warps.header.size() == 6);
  REQUIRE(warps.values.rows() == 2001);
  const CsvTable adapted = load_csv(dir + "/adapted_f1.csv");
  CHECK((adapted.values.col(8).array() - 1.0).abs().maxCoeff() < 1e-12);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-cli>\n");
    return 1;
  }
  g_cli = argv[1];
  g_dir = std::filesystem::path("/tmp") /
          ("graphspectra_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(g_dir);

  doctest::Context context;
  context.applyCommandLine(1, argv);
  const int rc = context.run();

  std::error_code ec;
  std::filesystem::remove_all(g_dir, ec);
  return rc;
}
