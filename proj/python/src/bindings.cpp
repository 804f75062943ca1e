// Python bindings for the core operations: graph construction, generators,
// the certified bisection solver, the brute-force oracle, structure
// analysis, and the SDP certificates.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bisect/adversary.hpp"
#include "bisect/experiments.hpp"
#include "bisect/generators.hpp"
#include "bisect/oracle.hpp"
#include "bisect/sdp.hpp"
#include "bisect/serialize.hpp"

namespace py = pybind11;
using namespace bisect;

namespace {

BisectionVector to_bisection(const std::vector<int>& values) { return BisectionVector(values); }

SolveOptions make_options(int max_iters, int restarts, int k_cap, std::uint64_t seed,
                          const std::optional<std::vector<int>>& hint) {
  SolveOptions opts;
  opts.max_iters = max_iters;
  opts.restarts = restarts;
  opts.k_cap = k_cap;
  opts.seed = seed;
  if (hint) opts.hint = to_bisection(*hint);
  return opts;
}

py::dict report_to_dict(const SolveReport& rep) {
  py::dict d;
  d["h_hat"] = rep.h_hat;
  d["best_cut"] = rep.best_cut;
  d["status"] = std::string(to_string(rep.status));
  d["multiplicity"] = rep.multiplicity;
  d["iterations"] = rep.iterations;
  py::list bis;
  for (const auto& b : rep.bisections) bis.append(b.values);
  d["bisections"] = bis;
  d["d_best"] = rep.d_best;
  d["diagnostic"] = rep.diagnostic;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "certified minimum graph bisection via the spectral lower bound";

  py::register_exception<Error>(m, "BisectError");

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("to_edge_list", [](const Graph& g) { return graph_to_edge_list(g); })
      .def_static("from_edge_list",
                  [](const std::string& text) { return graph_from_edge_list(text); });

  m.def("cut_width",
        [](const Graph& g, const std::vector<int>& y) { return cut_width(g, to_bisection(y)); });

  m.def(
      "gen_planted_bisection",
      [](int n, double p, double q, std::uint64_t seed) {
        const PlantedInstance inst = gen_planted_bisection(n, p, q, seed);
        return py::make_tuple(inst.graph, inst.planted.values);
      },
      py::arg("n"), py::arg("p"), py::arg("q"), py::arg("seed"));

  m.def("gen_hypercube", &gen_hypercube, py::arg("k"));

  m.def(
      "gen_planted_regular",
      [](int n, int r, int b, std::uint64_t seed) {
        const PlantedInstance inst = gen_planted_regular(n, r, b, seed);
        return py::make_tuple(inst.graph, inst.planted.values);
      },
      py::arg("n"), py::arg("r"), py::arg("b"), py::arg("seed"));

  m.def("make_fixture", [](const std::string& name) {
    const Fixture f = make_fixture(name);
    return py::make_tuple(f.graph, f.reference.values);
  });

  m.def(
      "solve",
      [](const Graph& g, int max_iters, int restarts, int k_cap, std::uint64_t seed,
         const std::optional<std::vector<int>>& hint) {
        return report_to_dict(solve(g, make_options(max_iters, restarts, k_cap, seed, hint)));
      },
      py::arg("graph"), py::arg("max_iters") = 150, py::arg("restarts") = 2,
      py::arg("k_cap") = 16, py::arg("seed") = 0, py::arg("hint") = std::nullopt);

  m.def("brute_force_bw", [](const Graph& g) {
    const OracleResult res = brute_force_bw(g);
    py::dict d;
    d["bw"] = res.bw;
    d["count"] = res.count;
    py::list bis;
    for (const auto& b : res.optimal_bisections) bis.append(b.values);
    d["optimal_bisections"] = bis;
    return d;
  });

  m.def("eval_g",
        [](const Graph& g, const std::vector<double>& d) { return eval_g_value(g, d); });
  m.def("eval_f", &eval_f);
  m.def("supergradient_g", &supergradient_g);
  m.def("normalize_d", &normalize_d);
  m.def("extract_bisection",
        [](const std::vector<double>& x) { return extract_bisection(x).values; });

  m.def("correction_from_bisection", [](const Graph& g, const std::vector<int>& y) {
    return correction_from_bisection(g, to_bisection(y));
  });
  m.def("recover_alpha",
        [](const Graph& g, const std::vector<int>& y, const std::vector<double>& d) {
          const AlphaRecovery rec = recover_alpha(g, to_bisection(y), d);
          return py::make_tuple(rec.alpha, rec.off_span_residual);
        });
  m.def("check_eigenvector_lemma",
        [](const Graph& g, const std::vector<double>& d, const std::vector<int>& y) {
          return check_eigenvector_lemma(g, d, to_bisection(y));
        });
  m.def("detect_isolated_pair", &detect_isolated_pair);
  m.def("witness_vector", [](const Graph& g, const std::vector<int>& y,
                             const std::vector<int>& c_plus, const std::vector<int>& c_minus) {
    const Witness w = witness_vector(g, to_bisection(y), c_plus, c_minus);
    py::dict params;
    params["k"] = w.params.k;
    params["delta"] = w.params.delta;
    params["l"] = w.params.l;
    params["z"] = w.params.z;
    params["beta"] = w.params.beta;
    params["swapped"] = w.params.swapped;
    return py::make_tuple(params, w.x);
  });
  m.def("disprove_tightness",
        [](const Graph& g, const std::vector<int>& y, const std::vector<double>& x) {
          const TightnessVerdict v = disprove_tightness(g, to_bisection(y), x);
          return py::make_tuple(v.rayleigh_excess, v.disproved);
        });

  m.def("build_primal_cert", [](const Graph& g, const std::vector<double>& d) {
    const PrimalCert cert = build_primal_cert(g, d);
    py::dict out;
    out["z"] = cert.z;
    out["objective"] = cert.objective;
    out["h_equiv"] = cert.h_equiv;
    out["min_eig_constraint"] = cert.min_eig_constraint;
    return out;
  });
  m.def("build_fk_dual_cert", [](const Graph& g, const std::vector<double>& d) {
    const FkDualCert cert = build_fk_dual_cert(g, d);
    py::dict out;
    out["x0"] = cert.x0;
    out["objective"] = cert.objective;
    out["min_eig_M"] = cert.min_eig_M;
    out["x"] = cert.x;
    return out;
  });
  m.def("rank_one_value", [](const Graph& g, const std::vector<int>& y) {
    return build_rank_one_point(to_bisection(y), g).hY;
  });

  m.def(
      "sample_monotone_moves",
      [](const Graph& g, const std::vector<int>& y, int count, std::uint64_t seed) {
        const SampledMoves s = sample_monotone_moves(g, to_bisection(y), count, seed);
        py::list moves;
        for (const auto& mv : s.moves)
          moves.append(py::make_tuple(
              mv.kind == MoveKind::RemoveCutEdge ? "RemoveCutEdge" : "AddInnerEdge", mv.u, mv.v));
        return py::make_tuple(moves, s.exhausted);
      },
      py::arg("graph"), py::arg("y"), py::arg("count"), py::arg("seed"));

  m.def("apply_monotone_moves",
        [](const Graph& g, const std::vector<int>& y,
           const std::vector<std::tuple<std::string, int, int>>& moves) {
          std::vector<MonotoneMove> mv;
          for (const auto& [kind, u, v] : moves)
            mv.push_back({kind == "RemoveCutEdge" ? MoveKind::RemoveCutEdge
                                                  : MoveKind::AddInnerEdge,
                          u, v});
          return apply_monotone_moves(g, to_bisection(y), mv);
        });
}
