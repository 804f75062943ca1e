#include "bisect/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bisect {

using nlohmann::json;

namespace {

json bisection_to_json(const BisectionVector& y) { return json(y.values); }

BisectionVector bisection_from_json(const json& j) {
  return BisectionVector(j.get<std::vector<int>>());
}

json edges_to_json(const Graph& g) {
  json arr = json::array();
  for (auto [u, v] : g.edges()) arr.push_back(json::array({u, v}));
  return arr;
}

}  // namespace

std::string instance_to_json(const PlantedInstance& inst) {
  json params;
  params["family"] = inst.params.family;
  if (inst.params.family == "planted" || inst.params.family == "adversarial") {
    params["p"] = inst.params.p;
    params["q"] = inst.params.q;
  }
  if (inst.params.family == "planted_regular") {
    params["r"] = inst.params.r;
    params["b"] = inst.params.b;
  }
  if (inst.params.family == "hypercube") params["k"] = inst.params.k;
  if (inst.params.family == "fixture") params["name"] = inst.params.name;
  if (inst.params.moves > 0) params["moves"] = inst.params.moves;

  json j;
  j["n"] = inst.graph.n();
  j["params"] = params;
  j["seed"] = inst.seed;
  j["planted"] = bisection_to_json(inst.planted);
  j["edges"] = edges_to_json(inst.graph);
  return j.dump(2) + "\n";
}

PlantedInstance instance_from_json(const std::string& text) {
  json j = json::parse(text);
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());

  PlantedInstance inst{Graph(n, std::move(edges)), bisection_from_json(j.at("planted")), {}, 0};
  inst.seed = j.at("seed").get<std::uint64_t>();
  const json& p = j.at("params");
  inst.params.family = p.at("family").get<std::string>();
  inst.params.p = p.value("p", 0.0);
  inst.params.q = p.value("q", 0.0);
  inst.params.r = p.value("r", 0);
  inst.params.b = p.value("b", 0);
  inst.params.k = p.value("k", 0);
  inst.params.name = p.value("name", std::string());
  inst.params.moves = p.value("moves", 0);
  if (inst.planted.size() != n) throw Error("instance planted vector length mismatch");
  return inst;
}

std::string solve_report_to_json(const SolveReport& report) {
  json j;
  j["h_hat"] = report.h_hat;
  j["best_cut"] = report.best_cut;
  j["status"] = to_string(report.status);
  j["multiplicity"] = report.multiplicity;
  j["iterations"] = report.iterations;
  json bis = json::array();
  for (const auto& b : report.bisections) bis.push_back(bisection_to_json(b));
  j["bisections"] = bis;
  j["d_best"] = report.d_best;
  return j.dump(2) + "\n";
}

SolveReport solve_report_from_json(const std::string& text) {
  json j = json::parse(text);
  SolveReport report;
  report.h_hat = j.at("h_hat").get<double>();
  report.best_cut = j.at("best_cut").get<int>();
  const std::string status = j.at("status").get<std::string>();
  if (status == "CertifiedOptimum")
    report.status = SolveStatus::CertifiedOptimum;
  else if (status == "Fail")
    report.status = SolveStatus::Fail;
  else
    throw Error("unknown solve status: " + status);
  report.multiplicity = j.at("multiplicity").get<int>();
  report.iterations = j.at("iterations").get<int>();
  for (const auto& b : j.at("bisections")) report.bisections.push_back(bisection_from_json(b));
  report.d_best = j.at("d_best").get<std::vector<double>>();
  return report;
}

std::string oracle_to_json(const OracleResult& result) {
  json j;
  j["bw"] = result.bw;
  j["count"] = result.count;
  json bis = json::array();
  for (const auto& b : result.optimal_bisections) bis.push_back(bisection_to_json(b));
  j["optimal_bisections"] = bis;
  return j.dump(2) + "\n";
}

std::string moves_to_json(const std::vector<MonotoneMove>& moves) {
  json arr = json::array();
  for (const auto& mv : moves) {
    json m;
    m["kind"] = mv.kind == MoveKind::RemoveCutEdge ? "RemoveCutEdge" : "AddInnerEdge";
    m["u"] = mv.u;
    m["v"] = mv.v;
    arr.push_back(m);
  }
  return arr.dump(2) + "\n";
}

std::vector<MonotoneMove> moves_from_json(const std::string& text) {
  json arr = json::parse(text);
  std::vector<MonotoneMove> moves;
  for (const auto& m : arr) {
    const std::string kind = m.at("kind").get<std::string>();
    MoveKind k;
    if (kind == "RemoveCutEdge")
      k = MoveKind::RemoveCutEdge;
    else if (kind == "AddInnerEdge")
      k = MoveKind::AddInnerEdge;
    else
      throw Error("unknown move kind: " + kind);
    moves.push_back({k, m.at("u").get<int>(), m.at("v").get<int>()});
  }
  return moves;
}

std::string certificates_to_json(const PrimalCert& primal, const FkDualCert& dual,
                                 const RankOnePoint& rank_one, double gap) {
  json j;
  j["primal"] = {{"z", primal.z},
                 {"objective", primal.objective},
                 {"h_equiv", primal.h_equiv},
                 {"min_eig_constraint", primal.min_eig_constraint},
                 {"d", primal.d}};
  j["fk_dual"] = {{"x0", dual.x0},
                  {"objective", dual.objective},
                  {"min_eig_M", dual.min_eig_M},
                  {"x", dual.x}};
  j["rank_one"] = {{"hY", rank_one.hY}, {"y", bisection_to_json(rank_one.y)}};
  j["gap"] = gap;
  return j.dump(2) + "\n";
}

std::string structure_report_to_json(const StructureReport& report) {
  json j;
  j["d_y"] = report.d_y;
  if (report.has_alpha)
    j["alpha"] = report.alpha;
  else
    j["alpha"] = nullptr;
  j["eigen_residual"] = report.eigen_residual;
  j["off_span_residual"] = report.off_span_residual;
  json v = json::array();
  for (const auto& f : report.violations) {
    json item;
    item["kind"] = f.kind;
    if (f.kind == "same_neighbor_pair") {
      item["u"] = f.u.front();
      item["w"] = f.w.front();
    } else if (f.kind == "path_segment") {
      item["u_prime"] = f.u[0];
      item["u"] = f.u[1];
      item["w"] = f.w[0];
      item["w_prime"] = f.w[1];
    } else if (f.kind == "lattice") {
      item["u"] = f.u;
      item["w"] = f.w;
    }
    v.push_back(item);
  }
  j["violations"] = v;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace bisect
