#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <tuple>
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

namespace py = pybind11;
using namespace graphspectra;

namespace {

BandedEsdOptions::Mode parse_banded_mode(const std::string& mode) {
  if (mode == "exact") return BandedEsdOptions::Mode::exact;
  if (mode == "cheb") return BandedEsdOptions::Mode::chebyshev;
  fail(errc::invalid_config, "banded mode must be 'exact' or 'cheb'");
}

}  // namespace

PYBIND11_MODULE(_graphspectra, m) {
  m.doc() = "Tight spectral filter banks on graphs";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "GraphSpectraError");

  py::enum_<LaplacianKind>(m, "LaplacianKind")
      .value("combinatorial", LaplacianKind::combinatorial)
      .value("normalized", LaplacianKind::normalized);

  py::enum_<DemeanMode>(m, "DemeanMode")
      .value("direct_rule", DemeanMode::direct_rule)
      .value("null_only", DemeanMode::null_only);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n_vertices,
                       const std::vector<std::tuple<int, int, double>>& edges) {
             std::vector<Edge> list;
             list.reserve(edges.size());
             for (const auto& [i, j, w] : edges) list.push_back({i, j, w});
             return build_graph(n_vertices, list);
           }),
           py::arg("n_vertices"), py::arg("edges"))
      .def_property_readonly("n_vertices", &Graph::n_vertices)
      .def_property_readonly("n_edges",
                             [](const Graph& g) { return g.edges().size(); })
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::tuple<int, int, double>> out;
                               out.reserve(g.edges().size());
                               for (const Edge& e : g.edges())
                                 out.emplace_back(e.i, e.j, e.w);
                               return out;
                             })
      .def("adjacency", [](const Graph& g) { return g.adjacency(); })
      .def("degrees", [](const Graph& g) { return g.degrees(); })
      .def("connected", &Graph::connected);

  m.def("random_geometric_graph", &random_geometric_graph, py::arg("n"),
        py::arg("radius") = -1.0, py::arg("seed") = 1);
  m.def(
      "standin_graph",
      [](int n, double radius, std::uint64_t seed) {
        StandinOptions options;
        options.n = n;
        options.radius = radius;
        options.seed = seed;
        return standin_graph(options);
      },
      py::arg("n") = 500, py::arg("radius") = 0.0, py::arg("seed") = 11);
  m.def(
      "load_graph",
      [](const std::string& path) { return load_graph(path); },
      py::arg("path"));

  py::class_<Laplacian>(m, "Laplacian")
      .def(py::init<const Graph&, LaplacianKind>(), py::arg("graph"),
           py::arg("kind") = LaplacianKind::combinatorial)
      .def_property_readonly("size", &Laplacian::size)
      .def_property_readonly("kind", &Laplacian::kind)
      .def("matrix", [](const Laplacian& op) { return op.matrix(); })
      .def("apply", &Laplacian::apply, py::arg("f"));

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("eigenvalues", &Spectrum::eigenvalues)
      .def_readonly("eigenvectors", &Spectrum::eigenvectors)
      .def_property_readonly("lambda_max", &Spectrum::lambda_max)
      .def("gft", &Spectrum::gft, py::arg("f"))
      .def("__len__", &Spectrum::size);
  m.def("full_spectrum", &full_spectrum, py::arg("op"),
        py::arg("group_tol") = -1.0, py::arg("max_size") = 5000);
  m.def("estimate_lambda_max", &estimate_lambda_max, py::arg("op"),
        py::arg("tol") = 1e-7, py::arg("max_iter") = 2000,
        py::arg("margin") = 0.01, py::arg("seed") = 20240501);

  py::class_<KernelSystem>(m, "KernelSystem")
      .def_property_readonly("bands", &KernelSystem::bands)
      .def_readonly("lambda_max", &KernelSystem::lambda_max)
      .def_readonly("tight", &KernelSystem::tight)
      .def_property_readonly(
          "family", [](const KernelSystem& s) { return s.design.family; })
      .def(
          "evaluate",
          [](const KernelSystem& s, int band, double x) {
            return s.kernel(band)(x);
          },
          py::arg("band"), py::arg("x"))
      .def(
          "sample",
          [](const KernelSystem& s, const Eigen::VectorXd& grid) {
            return sample_grid(s, grid);
          },
          py::arg("grid"));

  m.def("bspline", &bspline, py::arg("degree"), py::arg("x"));
  m.def("meyer_aux", &meyer_aux, py::arg("x"));
  m.def("bspline_system", &bspline_system, py::arg("bands"), py::arg("degree"),
        py::arg("lambda_max"));
  m.def("umt_system", &umt_system, py::arg("bands"), py::arg("lambda_max"),
        py::arg("gamma") = 2.73);
  m.def(
      "umt_geometry",
      [](int bands, double lambda_max, double gamma) {
        const UmtGeometry g = umt_geometry(bands, lambda_max, gamma);
        return std::make_tuple(g.a, g.delta, g.gamma);
      },
      py::arg("bands"), py::arg("lambda_max"), py::arg("gamma") = 2.73);
  m.def(
      "solve_gamma",
      [](double lambda_max, int bands) {
        GammaSolveOptions options;
        options.lambda_max = lambda_max;
        options.bands = bands;
        return solve_gamma(options);
      },
      py::arg("lambda_max") = 2.0, py::arg("bands") = 5);
  m.def("warp_system", &warp_system, py::arg("system"), py::arg("warp"));
  m.def("merge_bands", &merge_bands, py::arg("system"), py::arg("group_sizes"));
  m.def("coarse_band_partition", &coarse_band_partition,
        py::arg("band_energy"), py::arg("n_lower"), py::arg("n_mid"),
        py::arg("tail_fraction"));
  m.def("first_band_edge", &first_band_edge, py::arg("system"),
        py::arg("grid_points") = 16384);

  py::class_<FrameBounds>(m, "FrameBounds")
      .def_readonly("b1", &FrameBounds::b1)
      .def_readonly("b2", &FrameBounds::b2)
      .def_readonly("max_deviation_from_one",
                    &FrameBounds::max_deviation_from_one);
  m.def("frame_analysis", &frame_analysis, py::arg("system"),
        py::arg("grid_points") = 10000);

  py::class_<SampledSystem>(m, "SampledSystem")
      .def_readonly("values", &SampledSystem::values)
      .def_readonly("lambda_max", &SampledSystem::lambda_max)
      .def_property_readonly("bands", &SampledSystem::bands);
  m.def("sample_system", &sample_system, py::arg("system"), py::arg("spectrum"));

  py::class_<WarpFunction>(m, "WarpFunction")
      .def("__call__", &WarpFunction::operator(), py::arg("x"))
      .def_property_readonly("lambda_max", &WarpFunction::lambda_max)
      .def("preimage", &WarpFunction::preimage, py::arg("y"));
  m.def("monotone_cubic", &monotone_cubic, py::arg("x"), py::arg("y"));
  m.def("identity_warp", &identity_warp, py::arg("lambda_max"));
  m.def("energy_warp_exact", &energy_warp_exact, py::arg("esd"),
        py::arg("spectrum"));
  m.def("energy_warp_approx", &energy_warp_approx, py::arg("esd"));
  m.def("spectrum_warp", &spectrum_warp, py::arg("spectrum"));
  m.def("pivot_warp", &pivot_warp, py::arg("pivot"), py::arg("n_lower"),
        py::arg("n_total"), py::arg("lambda_max"),
        py::arg("smooth_width") = -1.0, py::arg("grid_points") = 8193);

  py::class_<SignalSet>(m, "SignalSet")
      .def(py::init([](const Eigen::MatrixXd& signals,
                       std::vector<std::string> labels) {
             SignalSet set;
             set.signals = signals;
             if (labels.empty()) {
               for (int i = 0; i < set.count(); ++i)
                 labels.push_back("s" + std::to_string(i));
             }
             set.labels = std::move(labels);
             return set;
           }),
           py::arg("signals"), py::arg("labels") = std::vector<std::string>{})
      .def_readonly("signals", &SignalSet::signals)
      .def_readonly("labels", &SignalSet::labels)
      .def_property_readonly("count", &SignalSet::count)
      .def("__len__", &SignalSet::count);
  m.def(
      "make_sets",
      [](const Graph& graph, const std::vector<std::pair<double, int>>& pairs,
         int realizations, std::uint64_t seed) {
        SignalSpec spec;
        spec.pairs = pairs;
        spec.realizations = realizations;
        spec.seed = seed;
        return make_sets(graph, spec);
      },
      py::arg("graph"), py::arg("pairs"), py::arg("realizations") = 10,
      py::arg("seed") = 1);
  m.def("add_noise", &add_noise, py::arg("set"), py::arg("snr_db"),
        py::arg("seed"));
  m.def("spike", &spike, py::arg("density"), py::arg("n_vertices"),
        py::arg("seed"));
  m.def("smooth_signal", &smooth_signal, py::arg("graph"),
        py::arg("smoothness"), py::arg("p"));
  m.def("save_signals", &save_signals, py::arg("path"), py::arg("set"));
  m.def("load_signals", &load_signals, py::arg("path"));

  py::class_<EnsembleEsd>(m, "EnsembleEsd")
      .def_property_readonly(
          "kind",
          [](const EnsembleEsd& esd) {
            return esd.kind == EnsembleEsd::Kind::direct ? "direct" : "banded";
          })
      .def_readonly("values", &EnsembleEsd::values)
      .def_readonly("abscissas", &EnsembleEsd::abscissas)
      .def_readonly("lambda_max", &EnsembleEsd::lambda_max);
  m.def("esd_direct", &esd_direct, py::arg("set"), py::arg("spectrum"),
        py::arg("mode") = DemeanMode::direct_rule);
  m.def(
      "esd_banded",
      [](const SignalSet& set, const Laplacian& op, int bands, int degree,
         const std::string& mode, int cheb_order, const Spectrum* spectrum) {
        BandedEsdOptions options;
        options.bands = bands;
        options.degree = degree;
        options.mode = parse_banded_mode(mode);
        options.cheb_order = cheb_order;
        return esd_banded(set, op, options, spectrum);
      },
      py::arg("set"), py::arg("op"), py::arg("bands") = 100,
      py::arg("degree") = 3, py::arg("mode") = "exact",
      py::arg("cheb_order") = 80, py::arg("spectrum") = nullptr);
  m.def("demean_normalize", &demean_normalize, py::arg("set"),
        py::arg("spectrum"), py::arg("mode") = DemeanMode::direct_rule);

  py::class_<ChebyshevFilter>(m, "ChebyshevFilter")
      .def_readonly("coeffs", &ChebyshevFilter::coeffs)
      .def_readonly("lambda_max", &ChebyshevFilter::lambda_max)
      .def_property_readonly("order", &ChebyshevFilter::order);
  m.def("cheb_filters", &cheb_filters, py::arg("system"), py::arg("order"),
        py::arg("lambda_max") = -1.0);
  m.def("cheb_eval", &cheb_eval, py::arg("filter"), py::arg("x"));
  m.def("cheb_apply", &cheb_apply, py::arg("op"), py::arg("filter"),
        py::arg("f"));

  m.def(
      "decompose_direct",
      [](const Eigen::VectorXd& f, const SampledSystem& system,
         const Spectrum& spec) { return decompose_direct(f, system, spec).values; },
      py::arg("f"), py::arg("system"), py::arg("spectrum"));
  m.def(
      "decompose_cheb",
      [](const Eigen::VectorXd& f, const Laplacian& op,
         const std::vector<ChebyshevFilter>& filters) {
        return decompose_cheb(f, op, filters).values;
      },
      py::arg("f"), py::arg("op"), py::arg("filters"));
  m.def(
      "reconstruct",
      [](const Eigen::MatrixXd& coefficients, const SampledSystem& system,
         const Spectrum& spec) {
        Coefficients coeffs;
        coeffs.values = coefficients;
        return reconstruct(coeffs, system, spec);
      },
      py::arg("coefficients"), py::arg("system"), py::arg("spectrum"));
  m.def(
      "band_energies",
      [](const Eigen::MatrixXd& coefficients) {
        Coefficients coeffs;
        coeffs.values = coefficients;
        return band_energies(coeffs);
      },
      py::arg("coefficients"));
  m.def("ensemble_band_energies", &ensemble_band_energies, py::arg("set"),
        py::arg("system"), py::arg("spectrum"),
        py::arg("mode") = DemeanMode::direct_rule);
  m.def("build_signal_adapted", &build_signal_adapted, py::arg("prototype"),
        py::arg("warp"));

  py::class_<AdaptedDesign>(m, "AdaptedDesign")
      .def_readonly("esd", &AdaptedDesign::esd)
      .def_readonly("banded", &AdaptedDesign::banded)
      .def_readonly("warp_exact", &AdaptedDesign::warp_exact)
      .def_readonly("warp_approx", &AdaptedDesign::warp_approx)
      .def_readonly("adapted_exact", &AdaptedDesign::adapted_exact)
      .def_readonly("adapted_approx", &AdaptedDesign::adapted_approx);
  m.def(
      "adapt_to_signals",
      [](const Laplacian& op, const Spectrum& spec, const SignalSet& set,
         int bands, int estimate_bands, double gamma, const std::string& mode,
         int cheb_order) {
        AdaptOptions options;
        options.bands = bands;
        options.estimate_bands = estimate_bands;
        options.gamma = gamma;
        options.banded_mode = parse_banded_mode(mode);
        options.cheb_order = cheb_order;
        return adapt_to_signals(op, spec, set, options);
      },
      py::arg("op"), py::arg("spectrum"), py::arg("set"), py::arg("bands") = 7,
      py::arg("estimate_bands") = 100, py::arg("gamma") = 2.73,
      py::arg("mode") = "exact", py::arg("cheb_order") = 80);

  py::class_<NoiseSweepPoint>(m, "NoiseSweepPoint")
      .def_readonly("snr_db", &NoiseSweepPoint::snr_db)
      .def_readonly("dist_to_energy_warp", &NoiseSweepPoint::dist_to_energy_warp)
      .def_readonly("dist_to_spectrum_warp",
                    &NoiseSweepPoint::dist_to_spectrum_warp)
      .def_readonly("sup_to_midpoint", &NoiseSweepPoint::sup_to_midpoint);
  py::class_<NoiseSweepResult>(m, "NoiseSweepResult")
      .def_readonly("points", &NoiseSweepResult::points)
      .def_readonly("distances_nonincreasing",
                    &NoiseSweepResult::distances_nonincreasing);
  m.def(
      "noise_sweep",
      [](const Laplacian& op, const Spectrum& spec, const SignalSet& clean,
         const std::vector<double>& snr_db, std::uint64_t noise_seed, int bands,
         int estimate_bands, double gamma, const std::string& mode,
         int cheb_order) {
        AdaptOptions options;
        options.bands = bands;
        options.estimate_bands = estimate_bands;
        options.gamma = gamma;
        options.banded_mode = parse_banded_mode(mode);
        options.cheb_order = cheb_order;
        return noise_sweep(op, spec, clean, snr_db, noise_seed, options);
      },
      py::arg("op"), py::arg("spectrum"), py::arg("set"), py::arg("snr_db"),
      py::arg("noise_seed") = 1, py::arg("bands") = 7,
      py::arg("estimate_bands") = 100, py::arg("gamma") = 2.73,
      py::arg("mode") = "exact", py::arg("cheb_order") = 80);
  m.def("warp_distance_l2", &warp_distance_l2, py::arg("s"), py::arg("t"),
        py::arg("grid_points") = 2001);
  m.def("warp_distance_sup", &warp_distance_sup, py::arg("s"), py::arg("t"),
        py::arg("grid_points") = 2001);
}
