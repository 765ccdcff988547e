// Command-line driver: graph loading, kernel-system design, spectral
// energy estimation, warps, decomposition and the synthetic experiments.
// All outputs are deterministic for a fixed configuration and seed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphspectra/chebyshev.hpp"
#include "graphspectra/energy.hpp"
#include "graphspectra/errors.hpp"
#include "graphspectra/experiments.hpp"
#include "graphspectra/graph.hpp"
#include "graphspectra/io.hpp"
#include "graphspectra/kernels.hpp"
#include "graphspectra/signal_model.hpp"
#include "graphspectra/spectrum.hpp"
#include "graphspectra/transform.hpp"
#include "graphspectra/warp.hpp"

namespace gs = graphspectra;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kGridPoints = 2001;

gs::GraphFormat parse_format(const std::string& name) {
  if (name == "auto") return gs::GraphFormat::automatic;
  if (name == "edgelist") return gs::GraphFormat::edgelist;
  if (name == "matrixmarket") return gs::GraphFormat::matrixmarket;
  gs::fail(gs::errc::invalid_config, "unknown graph format: " + name);
}

gs::LaplacianKind parse_kind(const std::string& name) {
  if (name == "comb") return gs::LaplacianKind::combinatorial;
  if (name == "norm") return gs::LaplacianKind::normalized;
  gs::fail(gs::errc::invalid_config, "unknown laplacian kind: " + name);
}

/// Options shared by every command that needs a graph. An empty path
/// selects the bundled stand-in (seeded random geometric graph).
struct GraphOptions {
  std::string path;
  std::string format = "auto";
  std::string laplacian = "comb";

  void attach(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--graph", path,
                                required ? "graph file (edge list or MatrixMarket)"
                                         : "graph file; omit for the built-in stand-in");
    if (required) opt->required();
    cmd->add_option("--format", format, "graph file format")
        ->check(CLI::IsMember({"auto", "edgelist", "matrixmarket"}));
    cmd->add_option("--laplacian", laplacian, "laplacian kind")
        ->check(CLI::IsMember({"comb", "norm"}));
  }

  gs::Graph load() const {
    if (path.empty()) return gs::standin_graph();
    return gs::load_graph(path, parse_format(format));
  }

  gs::LaplacianKind kind() const { return parse_kind(laplacian); }
};

/// Signal-set generation shared by esd/warp/experiment: the (density,
/// smoothness) pairs are the cross product of the two lists.
struct SignalOptions {
  std::string file;
  std::vector<double> eta{0.2, 0.5};
  std::vector<int> smoothness{2};
  int realizations = 10;
  std::uint64_t seed = 101;

  void attach(CLI::App* cmd) {
    cmd->add_option("--signals", file, "signal CSV; omit to generate diffused spikes");
    cmd->add_option("--eta", eta, "spike densities")->delimiter(',');
    cmd->add_option("--smoothness", smoothness, "diffusion orders")->delimiter(',');
    cmd->add_option("--realizations", realizations, "realizations per (eta, smoothness)");
    cmd->add_option("--seed", seed, "signal generator seed");
  }

  gs::SignalSet build(const gs::Graph& graph) const {
    if (!file.empty()) return gs::load_signals(file);
    gs::SignalSpec spec;
    for (int n : smoothness) {
      for (double d : eta) spec.pairs.emplace_back(d, n);
    }
    spec.realizations = realizations;
    spec.seed = seed;
    return gs::make_sets(graph, spec);
  }
};

/// Prototype-system selection shared by design/decompose/synth/experiment.
struct SystemOptions {
  std::string family = "umt";
  int bands = 7;
  int degree = 3;
  double gamma = 2.73;
  double pivot = 0.0;
  int lower = 20;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "kernel family")
        ->check(CLI::IsMember({"umt", "bspline", "sosks"}));
    cmd->add_option("--bands", bands, "band count (sosks: total bands)");
    cmd->add_option("--degree", degree, "B-spline degree");
    cmd->add_option("--gamma", gamma, "uniform Meyer-type aspect ratio");
    cmd->add_option("--pivot", pivot, "sosks pivot eigenvalue");
    cmd->add_option("--lower", lower, "sosks bands below the pivot");
  }

  gs::KernelSystem build(double lambda_max) const {
    if (family == "umt") return gs::umt_system(bands, lambda_max, gamma);
    if (family == "bspline") return gs::bspline_system(bands, degree, lambda_max);
    if (family == "sosks") {
      if (pivot <= 0.0 || pivot >= lambda_max) {
        gs::fail(gs::errc::invalid_pivot,
                 "sosks needs --pivot strictly inside (0, lambda_max)");
      }
      const gs::WarpFunction warp =
          gs::pivot_warp(pivot, lower, bands, lambda_max);
      return gs::warp_system(gs::bspline_system(bands, degree, lambda_max), warp);
    }
    gs::fail(gs::errc::invalid_config, "unknown kernel family: " + family);
  }

  std::string describe() const {
    std::ostringstream s;
    s << "family=" << family << ";bands=" << bands;
    if (family != "umt") s << ";degree=" << degree;
    if (family == "umt") s << ";gamma=" << gs::format_sig17(gamma);
    if (family == "sosks") {
      s << ";pivot=" << gs::format_sig17(pivot) << ";lower=" << lower;
    }
    return s.str();
  }
};

std::string hash_hex(const std::string& config) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(gs::fnv1a64(config)));
  return buf;
}

json provenance(const std::string& config, std::uint64_t seed) {
  json j;
  j["config"] = config;
  j["config_hash"] = hash_hex(config);
  j["seed"] = seed;
  j["tool_version"] = kToolVersion;
  return j;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) gs::fail(gs::errc::parse_error, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

std::filesystem::path ensure_directory(const std::string& out) {
  if (out.empty()) gs::fail(gs::errc::invalid_config, "--out is required");
  std::filesystem::path dir(out);
  std::filesystem::create_directories(dir);
  return dir;
}

Eigen::VectorXd uniform_grid(double lambda_max, int points) {
  Eigen::VectorXd grid(points);
  for (int i = 0; i < points; ++i) {
    grid(i) = lambda_max * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

/// Kernel table on the uniform grid: lambda, k_1..k_J and the frame sum G.
void save_kernel_table(const std::filesystem::path& path,
                       const gs::KernelSystem& system) {
  const Eigen::VectorXd grid = uniform_grid(system.lambda_max, kGridPoints);
  const Eigen::MatrixXd rows = gs::sample_grid(system, grid);
  Eigen::MatrixXd table(kGridPoints, system.bands() + 2);
  table.col(0) = grid;
  table.block(0, 1, kGridPoints, system.bands()) = rows.transpose();
  table.col(system.bands() + 1) = rows.colwise().squaredNorm().transpose();
  std::vector<std::string> header{"lambda"};
  for (int j = 1; j <= system.bands(); ++j) header.push_back("k" + std::to_string(j));
  header.push_back("G");
  gs::save_csv(path.string(), header, table);
}

json frame_bounds_json(const gs::KernelSystem& system) {
  const gs::FrameBounds fb = gs::frame_analysis(system);
  json j;
  j["b1"] = fb.b1;
  j["b2"] = fb.b2;
  j["max_deviation_from_one"] = fb.max_deviation_from_one;
  return j;
}

json design_json(const gs::KernelSystem& system) {
  const gs::SystemDesign& d = system.design;
  json j;
  j["family"] = d.family;
  j["bands"] = d.bands;
  if (d.degree >= 0) j["degree"] = d.degree;
  if (d.gamma > 0.0) {
    j["gamma"] = d.gamma;
    j["a"] = d.a;
    j["delta"] = d.delta;
  }
  j["lambda_max"] = system.lambda_max;
  j["tight"] = system.tight;
  j["frame_bounds"] = frame_bounds_json(system);
  json knots = json::array();
  for (const auto& [x, y] : d.warp_knots) knots.push_back({x, y});
  j["warp_knots"] = knots;
  return j;
}

void save_warp_table(const std::filesystem::path& path,
                     const gs::WarpFunction& warp) {
  const Eigen::VectorXd grid = uniform_grid(warp.lambda_max(), kGridPoints);
  Eigen::MatrixXd table(kGridPoints, 2);
  for (int i = 0; i < kGridPoints; ++i) {
    table(i, 0) = grid(i);
    table(i, 1) = warp(grid(i));
  }
  gs::save_csv(path.string(), {"lambda", "T"}, table);
}

// ---------------------------------------------------------------------------

int cmd_load(const GraphOptions& graph_options) {
  const gs::Graph g = graph_options.load();
  std::size_t edge_count = g.edges().size();
  const bool connected = g.connected();
  if (!connected) {
    std::cerr << "warning: graph is disconnected; spectral operations will reject it\n";
  }
  std::cout << "vertices: " << g.n_vertices() << "\n"
            << "edges: " << edge_count << "\n"
            << "connected: " << (connected ? "yes" : "no") << "\n";
  return 0;
}

int cmd_spectrum(const GraphOptions& graph_options, const std::string& out) {
  if (out.empty()) gs::fail(gs::errc::invalid_config, "--out is required");
  const gs::Graph g = graph_options.load();
  const gs::Laplacian op(g, graph_options.kind());
  const gs::Spectrum spec = gs::full_spectrum(op);
  Eigen::MatrixXd table(spec.size(), 2);
  for (int l = 0; l < spec.size(); ++l) {
    table(l, 0) = l;
    table(l, 1) = spec.eigenvalues(l);
  }
  gs::save_csv(out, {"l", "lambda"}, table);
  std::cout << "lambda_max: " << gs::format_sig17(spec.lambda_max()) << "\n";
  return 0;
}

int cmd_design(const GraphOptions& graph_options, const SystemOptions& system_options,
               double lambda_max_flag, const std::string& out) {
  const auto dir = ensure_directory(out);
  double lambda_max = lambda_max_flag;
  std::string domain = "lambda_max=" + gs::format_sig17(lambda_max);
  if (!graph_options.path.empty()) {
    const gs::Graph g = graph_options.load();
    const gs::Laplacian op(g, graph_options.kind());
    lambda_max = gs::full_spectrum(op).lambda_max();
    domain = "graph=" + graph_options.path + ";laplacian=" + graph_options.laplacian;
  }
  const gs::KernelSystem system = system_options.build(lambda_max);
  save_kernel_table(dir / "kernels.csv", system);
  const std::string config = "design;" + system_options.describe() + ";" + domain;
  json j = design_json(system);
  j.update(provenance(config, 0));
  write_json(dir / "design.json", j);
  std::cout << "kernels: " << (dir / "kernels.csv").string() << "\n"
            << "metadata: " << (dir / "design.json").string() << "\n";
  return 0;
}

int cmd_esd(const GraphOptions& graph_options, const SignalOptions& signal_options,
            int na, const std::string& mode, int order, int degree,
            const std::string& out) {
  if (out.empty()) gs::fail(gs::errc::invalid_config, "--out is required");
  const gs::Graph g = graph_options.load();
  const gs::Laplacian op(g, graph_options.kind());
  const gs::SignalSet set = signal_options.build(g);

  gs::EnsembleEsd esd;
  if (na <= 0) {
    const gs::Spectrum spec = gs::full_spectrum(op);
    esd = gs::esd_direct(set, spec);
  } else {
    gs::BandedEsdOptions options;
    options.bands = na;
    options.degree = degree;
    options.cheb_order = order;
    if (mode == "cheb") {
      options.mode = gs::BandedEsdOptions::Mode::chebyshev;
      esd = gs::esd_banded(set, op, options);
    } else {
      const gs::Spectrum spec = gs::full_spectrum(op);
      esd = gs::esd_banded(set, op, options, &spec);
    }
  }

  Eigen::MatrixXd table(esd.values.size(), 2);
  table.col(0) = esd.abscissas;
  table.col(1) = esd.values;
  const bool direct = esd.kind == gs::EnsembleEsd::Kind::direct;
  gs::save_csv(out, {direct ? "lambda" : "omega", direct ? "e" : "a"}, table);
  std::cout << "sum: " << gs::format_sig17(esd.values.sum()) << "\n";
  return 0;
}

int cmd_warp(const GraphOptions& graph_options, const SignalOptions& signal_options,
             const std::string& warp_mode, int na, int order,
             const std::string& banded_mode, double pivot, int lower, int total,
             const std::string& out) {
  if (out.empty()) gs::fail(gs::errc::invalid_config, "--out is required");
  const gs::Graph g = graph_options.load();
  const gs::Laplacian op(g, graph_options.kind());

  gs::WarpFunction warp;
  if (warp_mode == "pivot") {
    const double lambda_max = gs::full_spectrum(op).lambda_max();
    if (pivot <= 0.0 || pivot >= lambda_max) {
      gs::fail(gs::errc::invalid_pivot,
               "--pivot must lie strictly inside (0, lambda_max)");
    }
    warp = gs::pivot_warp(pivot, lower, total, lambda_max);
  } else if (warp_mode == "spectrum") {
    warp = gs::spectrum_warp(gs::full_spectrum(op));
  } else if (warp_mode == "energy-exact") {
    const gs::Spectrum spec = gs::full_spectrum(op);
    warp = gs::energy_warp_exact(gs::esd_direct(signal_options.build(g), spec), spec);
  } else {  // energy-approx
    gs::BandedEsdOptions options;
    options.bands = na;
    options.cheb_order = order;
    if (banded_mode == "cheb") {
      options.mode = gs::BandedEsdOptions::Mode::chebyshev;
      warp = gs::energy_warp_approx(gs::esd_banded(signal_options.build(g), op, options));
    } else {
      const gs::Spectrum spec = gs::full_spectrum(op);
      warp = gs::energy_warp_approx(
          gs::esd_banded(signal_options.build(g), op, options, &spec));
    }
  }
  save_warp_table(out, warp);
  std::cout << "lambda_max: " << gs::format_sig17(warp.lambda_max()) << "\n";
  return 0;
}

int cmd_decompose(const GraphOptions& graph_options, const SystemOptions& system_options,
                  const std::string& signals_file, int signal_index,
                  const std::string& mode, int order, const std::string& out) {
  if (out.empty()) gs::fail(gs::errc::invalid_config, "--out is required");
  if (signals_file.empty()) gs::fail(gs::errc::invalid_config, "--signals is required");
  const gs::Graph g = graph_options.load();
  const gs::Laplacian op(g, graph_options.kind());
  const gs::SignalSet set = gs::load_signals(signals_file);
  if (signal_index < 0 || signal_index >= set.count()) {
    gs::fail(gs::errc::index_out_of_range, "--signal-index outside the set");
  }
  const Eigen::VectorXd f = set.signals.col(signal_index);

  const gs::Spectrum spec = gs::full_spectrum(op);
  const gs::KernelSystem system = system_options.build(spec.lambda_max());
  gs::Coefficients coeffs;
  if (mode == "cheb") {
    coeffs = gs::decompose_cheb(f, op, gs::cheb_filters(system, order));
  } else {
    coeffs = gs::decompose_direct(f, gs::sample_system(system, spec), spec);
  }

  Eigen::MatrixXd table(coeffs.bands(), coeffs.size() + 1);
  for (int j = 0; j < coeffs.bands(); ++j) table(j, 0) = j + 1;
  table.block(0, 1, coeffs.bands(), coeffs.size()) = coeffs.values;
  std::vector<std::string> header{"band"};
  for (int v = 1; v <= coeffs.size(); ++v) header.push_back("v" + std::to_string(v));
  gs::save_csv(out, header, table);
  std::cout << "bands: " << coeffs.bands() << "\n";
  return 0;
}

int cmd_synth(const GraphOptions& graph_options, const SystemOptions& system_options,
              const std::string& coeffs_file, const std::string& out) {
  if (out.empty()) gs::fail(gs::errc::invalid_config, "--out is required");
  if (coeffs_file.empty()) gs::fail(gs::errc::invalid_config, "--coeffs is required");
  const gs::Graph g = graph_options.load();
  const gs::Laplacian op(g, graph_options.kind());
  const gs::Spectrum spec = gs::full_spectrum(op);
  const gs::KernelSystem system = system_options.build(spec.lambda_max());

  const gs::CsvTable table = gs::load_csv(coeffs_file);
  if (table.values.cols() != spec.size() + 1) {
    gs::fail(gs::errc::dimension_mismatch,
             "coefficient table does not match the graph size");
  }
  gs::Coefficients coeffs;
  coeffs.values = table.values.rightCols(spec.size());

  const Eigen::VectorXd f =
      gs::reconstruct(coeffs, gs::sample_system(system, spec), spec);
  Eigen::MatrixXd signal(f.size(), 2);
  for (int v = 0; v < f.size(); ++v) {
    signal(v, 0) = v + 1;
    signal(v, 1) = f(v);
  }
  gs::save_csv(out, {"vertex", "value"}, signal);
  std::cout << "vertices: " << f.size() << "\n";
  return 0;
}

/// The road-graph experiment on whichever graph is supplied (the bundled
/// stand-in by default): F1/F2 signal sets, exact and approximate
/// energy-equalizing warps, adapted systems and a spectrum-adapted
/// baseline.
int experiment_adapted(const gs::Laplacian& op, const gs::Spectrum& spec,
                       const gs::Graph& g, const SignalOptions& signal_options,
                       const gs::AdaptOptions& adapt, const std::string& config,
                       const std::filesystem::path& dir) {
  SignalOptions f1 = signal_options;
  f1.smoothness = {2};
  SignalOptions f2 = signal_options;
  f2.smoothness = {4};
  const gs::SignalSet set1 = f1.build(g);
  const gs::SignalSet set2 = f2.build(g);

  const gs::AdaptedDesign d1 = gs::adapt_to_signals(op, spec, set1, adapt);
  const gs::AdaptedDesign d2 = gs::adapt_to_signals(op, spec, set2, adapt);

  Eigen::MatrixXd esd1(spec.size(), 2), esd2(spec.size(), 2);
  esd1.col(0) = spec.eigenvalues;
  esd1.col(1) = d1.esd.values;
  esd2.col(0) = spec.eigenvalues;
  esd2.col(1) = d2.esd.values;
  gs::save_csv((dir / "esd_f1.csv").string(), {"lambda", "e"}, esd1);
  gs::save_csv((dir / "esd_f2.csv").string(), {"lambda", "e"}, esd2);

  const gs::WarpFunction t_spectrum = gs::spectrum_warp(spec);
  const Eigen::VectorXd grid = uniform_grid(spec.lambda_max(), kGridPoints);
  Eigen::MatrixXd warps(kGridPoints, 6);
  for (int i = 0; i < kGridPoints; ++i) {
    const double x = grid(i);
    warps(i, 0) = x;
    warps(i, 1) = d1.warp_exact(x);
    warps(i, 2) = d1.warp_approx(x);
    warps(i, 3) = d2.warp_exact(x);
    warps(i, 4) = d2.warp_approx(x);
    warps(i, 5) = t_spectrum(x);
  }
  gs::save_csv((dir / "warps.csv").string(),
               {"lambda", "T_F1_exact", "T_F1_approx", "T_F2_exact",
                "T_F2_approx", "T_spectrum"},
               warps);

  const gs::KernelSystem spectrum_adapted = gs::build_signal_adapted(
      gs::umt_system(adapt.bands, spec.lambda_max(), adapt.gamma), t_spectrum);
  save_kernel_table(dir / "adapted_f1.csv", d1.adapted_approx);
  save_kernel_table(dir / "adapted_f2.csv", d2.adapted_approx);
  save_kernel_table(dir / "spectrum_adapted.csv", spectrum_adapted);

  const double edge1 = gs::first_band_edge(d1.adapted_approx);
  const double edge2 = gs::first_band_edge(d2.adapted_approx);
  json j = provenance(config, signal_options.seed);
  j["lambda_max"] = spec.lambda_max();
  j["first_band_edge"] = {{"f1", edge1}, {"f2", edge2}};
  j["f2_edge_below_f1"] = edge2 < edge1;
  j["frame_bounds"] = {{"adapted_f1", frame_bounds_json(d1.adapted_approx)},
                       {"adapted_f2", frame_bounds_json(d2.adapted_approx)},
                       {"spectrum_adapted", frame_bounds_json(spectrum_adapted)}};
  write_json(dir / "report.json", j);
  std::cout << "first band edges: F1 " << gs::format_sig17(edge1) << ", F2 "
            << gs::format_sig17(edge2) << "\n";
  return 0;
}

int experiment_noise(const gs::Laplacian& op, const gs::Spectrum& spec,
                     const gs::Graph& g, const SignalOptions& signal_options,
                     const gs::AdaptOptions& adapt, const std::vector<double>& snr_list,
                     std::uint64_t noise_seed, const std::string& config,
                     const std::filesystem::path& dir) {
  const gs::SignalSet clean = signal_options.build(g);
  const gs::NoiseSweepResult sweep =
      gs::noise_sweep(op, spec, clean, snr_list, noise_seed, adapt);

  Eigen::MatrixXd table(static_cast<Eigen::Index>(sweep.points.size()), 4);
  for (std::size_t i = 0; i < sweep.points.size(); ++i) {
    const auto& p = sweep.points[i];
    table(static_cast<Eigen::Index>(i), 0) = p.snr_db;
    table(static_cast<Eigen::Index>(i), 1) = p.dist_to_energy_warp;
    table(static_cast<Eigen::Index>(i), 2) = p.dist_to_spectrum_warp;
    table(static_cast<Eigen::Index>(i), 3) = p.sup_to_midpoint;
  }
  gs::save_csv((dir / "noise_sweep.csv").string(),
               {"snr_db", "dist_to_energy_warp", "dist_to_spectrum_warp",
                "sup_to_midpoint"},
               table);

  json j = provenance(config, signal_options.seed);
  j["noise_seed"] = noise_seed;
  j["distances_nonincreasing"] = sweep.distances_nonincreasing;
  write_json(dir / "report.json", j);
  std::cout << "distances nonincreasing: "
            << (sweep.distances_nonincreasing ? "yes" : "no") << "\n";
  return 0;
}

int experiment_equi_energy(const gs::Laplacian& op, const gs::Spectrum& spec,
                           const gs::Graph& g, const SignalOptions& signal_options,
                           const gs::AdaptOptions& adapt, const std::string& config,
                           const std::filesystem::path& dir) {
  const gs::SignalSet set = signal_options.build(g);
  const gs::AdaptedDesign design = gs::adapt_to_signals(op, spec, set, adapt);
  const Eigen::VectorXd energies = gs::ensemble_band_energies(
      set, gs::sample_system(design.adapted_exact, spec), spec);

  Eigen::MatrixXd table(energies.size(), 2);
  for (int j = 0; j < energies.size(); ++j) {
    table(j, 0) = j + 1;
    table(j, 1) = energies(j);
  }
  gs::save_csv((dir / "equi_energy.csv").string(), {"band", "energy"}, table);

  const double target = 1.0 / static_cast<double>(energies.size());
  const double deviation = (energies.array() - target).abs().maxCoeff();
  json j = provenance(config, signal_options.seed);
  j["bands"] = static_cast<int>(energies.size());
  j["target"] = target;
  j["max_deviation"] = deviation;
  write_json(dir / "report.json", j);
  std::cout << "max deviation from 1/" << energies.size() << ": "
            << gs::format_sig17(deviation) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight spectral filter banks on graphs: design, adaptation and decomposition"};
  app.require_subcommand(1);

  // --- load ---------------------------------------------------------------
  auto* load = app.add_subcommand("load", "parse and validate a graph file");
  GraphOptions load_graph_options;
  load_graph_options.attach(load, true);

  // --- spectrum -----------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "export the Laplacian eigenvalues");
  GraphOptions spectrum_graph_options;
  spectrum_graph_options.attach(spectrum, false);
  std::string spectrum_out;
  spectrum->add_option("--out", spectrum_out, "output CSV")->required();

  // --- design -------------------------------------------------------------
  auto* design = app.add_subcommand("design", "emit a kernel system and its metadata");
  GraphOptions design_graph_options;
  design_graph_options.attach(design, false);
  design->get_option("--graph")
      ->description("graph supplying the spectral domain; omit to use --lambda-max");
  SystemOptions design_system_options;
  design_system_options.attach(design);
  double design_lambda_max = 2.0;
  design->add_option("--lambda-max", design_lambda_max,
                     "spectral domain end when no graph is given");
  std::string design_out;
  design->add_option("--out", design_out, "output directory")->required();

  // --- esd ----------------------------------------------------------------
  auto* esd = app.add_subcommand("esd", "ensemble energy spectral density");
  GraphOptions esd_graph_options;
  esd_graph_options.attach(esd, false);
  SignalOptions esd_signal_options;
  esd_signal_options.attach(esd);
  int esd_na = 0;
  esd->add_option("--na", esd_na, "estimation bands; 0 computes the direct ESD");
  std::string esd_mode = "exact";
  esd->add_option("--mode", esd_mode, "banded filtering mode")
      ->check(CLI::IsMember({"exact", "cheb"}));
  int esd_order = 80;
  esd->add_option("--order", esd_order, "Chebyshev order");
  int esd_degree = 3;
  esd->add_option("--degree", esd_degree, "estimation B-spline degree");
  std::string esd_out;
  esd->add_option("--out", esd_out, "output CSV")->required();

  // --- warp ---------------------------------------------------------------
  auto* warp = app.add_subcommand("warp", "emit a transformation function");
  GraphOptions warp_graph_options;
  warp_graph_options.attach(warp, false);
  SignalOptions warp_signal_options;
  warp_signal_options.attach(warp);
  std::string warp_mode;
  warp->add_option("--warp", warp_mode, "warp construction")
      ->check(CLI::IsMember({"energy-exact", "energy-approx", "spectrum", "pivot"}))
      ->required();
  int warp_na = 100;
  warp->add_option("--na", warp_na, "estimation bands for energy-approx");
  int warp_order = 80;
  warp->add_option("--order", warp_order, "Chebyshev order for --mode cheb");
  std::string warp_banded_mode = "exact";
  warp->add_option("--mode", warp_banded_mode, "banded filtering mode")
      ->check(CLI::IsMember({"exact", "cheb"}));
  double warp_pivot = 0.0;
  warp->add_option("--pivot", warp_pivot, "pivot eigenvalue");
  int warp_lower = 20;
  warp->add_option("--lower", warp_lower, "bands below the pivot");
  int warp_total = 57;
  warp->add_option("--bands", warp_total, "total bands for the pivot warp");
  std::string warp_out;
  warp->add_option("--out", warp_out, "output CSV")->required();

  // --- decompose ----------------------------------------------------------
  auto* decompose = app.add_subcommand("decompose", "filter-bank analysis of one signal");
  GraphOptions decompose_graph_options;
  decompose_graph_options.attach(decompose, true);
  SystemOptions decompose_system_options;
  decompose_system_options.attach(decompose);
  std::string decompose_signals;
  decompose->add_option("--signals", decompose_signals, "signal CSV")->required();
  int decompose_index = 0;
  decompose->add_option("--signal-index", decompose_index, "column to decompose");
  std::string decompose_mode = "direct";
  decompose->add_option("--mode", decompose_mode, "analysis route")
      ->check(CLI::IsMember({"direct", "cheb"}));
  int decompose_order = 80;
  decompose->add_option("--order", decompose_order, "Chebyshev order");
  std::string decompose_out;
  decompose->add_option("--out", decompose_out, "output CSV")->required();

  // --- synth --------------------------------------------------------------
  auto* synth = app.add_subcommand("synth", "reconstruct a signal from coefficients");
  GraphOptions synth_graph_options;
  synth_graph_options.attach(synth, true);
  SystemOptions synth_system_options;
  synth_system_options.attach(synth);
  std::string synth_coeffs;
  synth->add_option("--coeffs", synth_coeffs, "coefficient CSV from decompose")->required();
  std::string synth_out;
  synth->add_option("--out", synth_out, "output CSV")->required();

  // --- experiment ---------------------------------------------------------
  auto* experiment = app.add_subcommand("experiment", "run a bundled experiment");
  std::string experiment_name;
  experiment->add_option("name", experiment_name, "experiment to run")
      ->check(CLI::IsMember({"minnesota", "noise-sweep", "equi-energy"}))
      ->required();
  GraphOptions experiment_graph_options;
  experiment_graph_options.attach(experiment, false);
  SignalOptions experiment_signal_options;
  experiment_signal_options.attach(experiment);
  int experiment_bands = 7;
  experiment->add_option("--bands", experiment_bands, "adapted system band count");
  int experiment_na = 100;
  experiment->add_option("--na", experiment_na, "estimation bands");
  int experiment_order = 80;
  experiment->add_option("--order", experiment_order, "Chebyshev order for --mode cheb");
  std::string experiment_mode = "exact";
  experiment->add_option("--mode", experiment_mode, "banded filtering mode")
      ->check(CLI::IsMember({"exact", "cheb"}));
  double experiment_gamma = 2.73;
  experiment->add_option("--gamma", experiment_gamma, "uniform Meyer-type aspect ratio");
  std::vector<double> experiment_snr{-20.0, -10.0, 0.0, 10.0, 20.0};
  experiment->add_option("--snr-list", experiment_snr, "noise sweep SNRs in dB")
      ->delimiter(',');
  std::uint64_t experiment_noise_seed = 1;
  experiment->add_option("--noise-seed", experiment_noise_seed, "noise realization seed");
  std::string experiment_out;
  experiment->add_option("--out", experiment_out, "report directory")->required();

  try {
    app.parse(argc, argv);

    if (load->parsed()) return cmd_load(load_graph_options);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_graph_options, spectrum_out);
    if (design->parsed()) {
      return cmd_design(design_graph_options, design_system_options,
                        design_lambda_max, design_out);
    }
    if (esd->parsed()) {
      return cmd_esd(esd_graph_options, esd_signal_options, esd_na, esd_mode,
                     esd_order, esd_degree, esd_out);
    }
    if (warp->parsed()) {
      return cmd_warp(warp_graph_options, warp_signal_options, warp_mode,
                      warp_na, warp_order, warp_banded_mode, warp_pivot,
                      warp_lower, warp_total, warp_out);
    }
    if (decompose->parsed()) {
      return cmd_decompose(decompose_graph_options, decompose_system_options,
                           decompose_signals, decompose_index, decompose_mode,
                           decompose_order, decompose_out);
    }
    if (synth->parsed()) {
      return cmd_synth(synth_graph_options, synth_system_options, synth_coeffs,
                       synth_out);
    }
    if (experiment->parsed()) {
      const auto dir = ensure_directory(experiment_out);
      const gs::Graph g = experiment_graph_options.load();
      const gs::Laplacian op(g, experiment_graph_options.kind());
      const gs::Spectrum spec = gs::full_spectrum(op);
      gs::AdaptOptions adapt;
      adapt.bands = experiment_bands;
      adapt.estimate_bands = experiment_na;
      adapt.gamma = experiment_gamma;
      adapt.cheb_order = experiment_order;
      adapt.banded_mode = experiment_mode == "cheb"
                              ? gs::BandedEsdOptions::Mode::chebyshev
                              : gs::BandedEsdOptions::Mode::exact;
      std::ostringstream config;
      config << "experiment=" << experiment_name
             << ";graph=" << (experiment_graph_options.path.empty()
                                  ? "standin"
                                  : experiment_graph_options.path)
             << ";laplacian=" << experiment_graph_options.laplacian
             << ";bands=" << experiment_bands << ";na=" << experiment_na
             << ";mode=" << experiment_mode
             << ";seed=" << experiment_signal_options.seed;
      if (experiment_name == "minnesota") {
        return experiment_adapted(op, spec, g, experiment_signal_options, adapt,
                                  config.str(), dir);
      }
      if (experiment_name == "noise-sweep") {
        return experiment_noise(op, spec, g, experiment_signal_options, adapt,
                                experiment_snr, experiment_noise_seed,
                                config.str(), dir);
      }
      return experiment_equi_energy(op, spec, g, experiment_signal_options,
                                    adapt, config.str(), dir);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gs::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
