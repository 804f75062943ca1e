#include <doctest.h>

#include <cmath>

#include "bisect/adversary.hpp"
#include "bisect/generators.hpp"
#include "bisect/oracle.hpp"
#include "bisect/solver.hpp"
#include "bisect/serialize.hpp"
#include "bisect/structure.hpp"
#include "test_util.hpp"

using namespace bisect;

TEST_CASE("correction_from_bisection") {
  SUBCASE("P4") {
    const CorrectionVector d = correction_from_bisection(testutil::path4(), testutil::halves(4));
    CHECK(d == CorrectionVector{-1, 0, 0, -1});
  }
  SUBCASE("empty graph") {
    const CorrectionVector d = correction_from_bisection(Graph(6, {}), testutil::halves(6));
    for (double v : d) CHECK(v == 0.0);
  }
  SUBCASE("K4,4: every neighbor is across") {
    const CorrectionVector d = correction_from_bisection(testutil::k44(), testutil::halves(8));
    for (double v : d) CHECK(v == 4.0);
  }
  SUBCASE("sum identity 4*cw - 2m on random graphs") {
    Rng rng(71);
    for (int it = 0; it < 50; ++it) {
      const int n = 6 + 2 * static_cast<int>(rng.uniform_int(6));
      const Graph g = testutil::random_graph(n, 0.4, rng);
      const BisectionVector y = testutil::random_bisection(n, rng);
      const CorrectionVector d = correction_from_bisection(g, y);
      double sum = 0.0;
      for (double v : d) sum += v;
      CHECK(sum == 4.0 * cut_width(g, y) - 2.0 * g.m());
    }
  }
}

TEST_CASE("recover_alpha") {
  Rng rng(72);
  const Graph g = testutil::random_graph(10, 0.5, rng);
  const BisectionVector y = testutil::random_bisection(10, rng);
  const CorrectionVector dy = correction_from_bisection(g, y);

  SUBCASE("exact span membership") {
    CorrectionVector d(10);
    for (int i = 0; i < 10; ++i) d[i] = dy[i] + 3.0 * y[i] + 5.0;
    const AlphaRecovery rec = recover_alpha(g, y, d);
    CHECK(rec.alpha == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rec.off_span_residual <= 1e-12);
  }
  SUBCASE("d_star = d^(y)") {
    const AlphaRecovery rec = recover_alpha(g, y, dy);
    CHECK(rec.alpha == doctest::Approx(0.0));
    CHECK(rec.off_span_residual <= 1e-14);
  }
  SUBCASE("round trip over random alpha and shift") {
    for (int it = 0; it < 100; ++it) {
      const double alpha = rng.uniform(-20.0, 20.0);
      const double c = rng.uniform(-20.0, 20.0);
      CorrectionVector d(10);
      for (int i = 0; i < 10; ++i) d[i] = dy[i] + alpha * y[i] + c;
      const AlphaRecovery rec = recover_alpha(g, y, d);
      CHECK(std::fabs(rec.alpha - alpha) <= 1e-10);
      CHECK(rec.off_span_residual <= 1e-10);
    }
  }
  SUBCASE("certified planted solve lands near the span") {
    const PlantedInstance inst = gen_planted_bisection(12, 0.95, 0.05, 4);
    const SolveReport rep = solve(inst.graph);
    REQUIRE(rep.status == SolveStatus::CertifiedOptimum);
    const OracleResult oracle = brute_force_bw(inst.graph);
    if (oracle.count == 1) {
      const AlphaRecovery rec = recover_alpha(inst.graph, oracle.optimal_bisections[0], rep.d_best);
      CHECK(rec.off_span_residual <= 1e-5);
    }
  }
}

TEST_CASE("check_eigenvector_lemma") {
  SUBCASE("P4 at d^(y)") {
    CHECK(check_eigenvector_lemma(testutil::path4(), {-1, 0, 0, -1}, testutil::halves(4)) <= 1e-10);
  }
  SUBCASE("H8 at -ones for a dimension cut") {
    const Graph h8 = gen_hypercube(3);
    std::vector<int> cut(8);
    for (int v = 0; v < 8; ++v) cut[v] = (v & 4) ? -1 : 1;
    CHECK(check_eigenvector_lemma(h8, std::vector<double>(8, -1.0), BisectionVector(cut)) <= 1e-10);
  }
  SUBCASE("random d just reports a number") {
    Rng rng(73);
    const Graph g = testutil::random_graph(10, 0.4, rng);
    const double res = check_eigenvector_lemma(g, testutil::random_d(10, 3.0, rng),
                                               testutil::random_bisection(10, rng));
    CHECK(res >= 0.0);
  }
}

TEST_CASE("balanced same-neighbor violations") {
  SUBCASE("path fixture: the cut pair is adjacent, so the lemma does not apply") {
    const Fixture f = make_fixture("path");
    CHECK(balanced_same_neighbor_violations(f.graph, f.reference).empty());
  }
  SUBCASE("K4,4: no balanced vertices") {
    CHECK(balanced_same_neighbor_violations(testutil::k44(), testutil::halves(8)).empty());
  }
  SUBCASE("two K4s: no balanced cross pairs") {
    CHECK(balanced_same_neighbor_violations(testutil::two_k4(), testutil::halves(8)).empty());
  }
  SUBCASE("C6 with the contiguous optimal bisection") {
    const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    const BisectionVector y({1, 1, 1, -1, -1, -1});
    const auto v = balanced_same_neighbor_violations(c6, y);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == std::pair<int, int>{0, 3});
    CHECK(v[1] == std::pair<int, int>{2, 5});
  }
}

TEST_CASE("path segment detector") {
  SUBCASE("path fixture") {
    const Fixture f = make_fixture("path");
    const PathSegmentReport rep = detect_path_segment(f.graph, f.reference);
    CHECK(rep.conclusive);
    REQUIRE(rep.segments.size() == 1);
    CHECK(rep.segments[0].u_prime == 3);
    CHECK(rep.segments[0].u == 4);
    CHECK(rep.segments[0].w == 5);
    CHECK(rep.segments[0].w_prime == 6);
  }
  SUBCASE("hypercube: all degrees 3") {
    std::vector<int> cut(8);
    for (int v = 0; v < 8; ++v) cut[v] = (v & 1) ? -1 : 1;
    CHECK(detect_path_segment(gen_hypercube(3), BisectionVector(cut)).segments.empty());
  }
  SUBCASE("C4 candidates exist but n < 10 is inconclusive") {
    const PathSegmentReport rep = detect_path_segment(testutil::c4(), testutil::halves(4));
    CHECK_FALSE(rep.conclusive);
    CHECK(rep.segments.size() >= 1);
  }
}

TEST_CASE("lattice detector") {
  SUBCASE("2x2 lattice fixture") {
    const Fixture f = make_fixture("lattice");
    const LatticeReport rep = detect_lattice(f.graph, f.reference, 2);
    CHECK(rep.conclusive);
    REQUIRE(rep.lattices.size() == 1);
    CHECK(rep.lattices[0].u == std::vector<int>{20, 21});
    CHECK(rep.lattices[0].w == std::vector<int>{22, 23});
  }
  SUBCASE("max degree < 3 gives nothing for c >= 2") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 12; ++i)
      e.emplace_back(std::min(i, (i + 1) % 12), std::max(i, (i + 1) % 12));
    const Graph ring(12, std::move(e));
    std::vector<int> y(12, -1);
    for (int i = 0; i < 6; ++i) y[i] = 1;
    CHECK(detect_lattice(ring, BisectionVector(y), 2).lattices.empty());
  }
  SUBCASE("c=1 delegates to the path detector") {
    const Fixture f = make_fixture("path");
    const LatticeReport rep = detect_lattice(f.graph, f.reference, 1);
    REQUIRE(rep.lattices.size() == 1);
    CHECK(rep.lattices[0].u == std::vector<int>{4});
    CHECK(rep.lattices[0].w == std::vector<int>{5});
  }
}

TEST_CASE("isolated pair detector") {
  CHECK(detect_isolated_pair(make_fixture("isolated").graph));
  CHECK_FALSE(detect_isolated_pair(testutil::c4()));
  SUBCASE("empty graph: detector fires but the zero cut still certifies") {
    const Graph g(6, {});
    CHECK(detect_isolated_pair(g));
    const SolveReport rep = solve(g);
    CHECK(rep.status == SolveStatus::CertifiedOptimum);
    CHECK(rep.best_cut == 0);
  }
  SUBCASE("isolated fixture fails to certify; oracle confirms bw 2") {
    const Fixture f = make_fixture("isolated");
    CHECK(brute_force_bw(f.graph).bw == 2);
    CHECK(solve(f.graph).status == SolveStatus::Fail);
  }
  SUBCASE("achieved bound drops by at least 4 bw/n^2 when isolating") {
    const SolveReport base = solve(testutil::c4());
    REQUIRE(base.status == SolveStatus::CertifiedOptimum);
    const SolveReport iso = solve(make_fixture("isolated").graph);
    CHECK(iso.h_hat <= base.h_hat - 4.0 * base.best_cut / 16.0 + 1e-6);
  }
}

TEST_CASE("witness vector") {
  const Fixture f = make_fixture("path");
  SUBCASE("path fixture parameters") {
    const Witness w = witness_vector(f.graph, f.reference, {4}, {5});
    CHECK(w.params.k == 1);
    CHECK(w.params.delta == 0);
    CHECK(w.params.l == 4);
    CHECK(w.params.z == doctest::Approx(4.0));      // z = l/k when delta = 0
    CHECK(w.params.beta == doctest::Approx(0.25));  // beta = 1/z
    double sum = 0.0;
    for (double v : w.x) sum += v;
    CHECK(std::fabs(sum) <= 1e-9);
  }
  SUBCASE("lattice fixture parameters") {
    const Fixture lat = make_fixture("lattice");
    const Witness w = witness_vector(lat.graph, lat.reference, {20, 21}, {22, 23});
    CHECK_FALSE(w.params.swapped);
    CHECK(w.params.k == 2);
    CHECK(w.params.l == 10);
    CHECK(w.params.z == doctest::Approx(5.0));
    CHECK(w.params.beta == doctest::Approx(0.2));
  }
  SUBCASE("violated size condition names 3k < l") {
    // two K7s joined by two cross edges: k = 2, l = 5 and 3k >= l
    std::vector<std::pair<int, int>> e;
    for (int base : {0, 7})
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) e.emplace_back(base + i, base + j);
    e.emplace_back(0, 7);
    e.emplace_back(1, 8);
    const Graph g(14, std::move(e));
    std::vector<int> side(14, -1);
    for (int i = 0; i < 7; ++i) side[i] = 1;
    CHECK_THROWS_WITH_AS(witness_vector(g, BisectionVector(side), {0, 1}, {7, 8}),
                         doctest::Contains("3k < l"), Error);
  }
  SUBCASE("per-side sums of squares agree") {
    const Witness w = witness_vector(f.graph, f.reference, {4}, {5});
    double sq_plus = 0.0, sq_minus = 0.0;
    for (int i = 0; i < f.graph.n(); ++i)
      (f.reference[i] > 0 ? sq_plus : sq_minus) += w.x[i] * w.x[i];
    CHECK(std::fabs(sq_plus - sq_minus) <= 1e-9 * f.graph.n());
  }
}

TEST_CASE("disprove_tightness") {
  SUBCASE("path fixture: excess is exactly 14") {
    const Fixture f = make_fixture("path");
    const Witness w = witness_vector(f.graph, f.reference, {4}, {5});
    const TightnessVerdict v = disprove_tightness(f.graph, f.reference, w.x);
    CHECK(v.rayleigh_excess == doctest::Approx(14.0).epsilon(1e-9));
    CHECK(v.disproved);
    CHECK(solve(f.graph).status == SolveStatus::Fail);
    CHECK(brute_force_bw(f.graph).bw == 1);
  }
  SUBCASE("lattice fixture: excess 56") {
    const Fixture f = make_fixture("lattice");
    const Witness w = witness_vector(f.graph, f.reference, {20, 21}, {22, 23});
    const TightnessVerdict v = disprove_tightness(f.graph, f.reference, w.x);
    CHECK(v.rayleigh_excess == doctest::Approx(56.0).epsilon(1e-9));
    CHECK(v.disproved);
  }
  SUBCASE("hypercube guard: the whole boundary violates the size condition") {
    const Graph h8 = gen_hypercube(3);
    std::vector<int> cut(8);
    std::vector<int> cp, cm;
    for (int v = 0; v < 8; ++v) {
      cut[v] = (v & 1) ? -1 : 1;
      (cut[v] > 0 ? cp : cm).push_back(v);
    }
    CHECK_THROWS_AS(witness_vector(h8, BisectionVector(cut), cp, cm), Error);
  }
  SUBCASE("unbalanced vector rejected") {
    const Fixture fx = make_fixture("path");
    CHECK_THROWS_AS(disprove_tightness(fx.graph, fx.reference, std::vector<double>(10, 1.0)),
                    Error);
  }
}

TEST_CASE("monotone d-update re-certifies edited graphs") {
  SUBCASE("hypercube plus an inner edge keeps g at the bisection width") {
    const Graph h8 = gen_hypercube(3);
    std::vector<int> cutv(8);
    for (int v = 0; v < 8; ++v) cutv[v] = (v & 4) ? -1 : 1;
    const BisectionVector y(cutv);
    const Graph h8p = h8.with_edge(0, 3);  // same side: labels 000 and 011
    const CorrectionVector d = monotone_d_update(h8, y, std::vector<double>(8, -1.0), {{0, 3}});
    CHECK(eval_g_value(h8p, d) == doctest::Approx(4.0).epsilon(1e-10));
  }
  SUBCASE("planted instance: mixed removals and additions") {
    const PlantedInstance inst = gen_planted_bisection(32, 0.8, 0.12, 9);
    const SolveReport rep = solve(inst.graph);
    REQUIRE(rep.status == SolveStatus::CertifiedOptimum);
    REQUIRE(cut_width(inst.graph, inst.planted) == rep.best_cut);

    const SampledMoves mv = sample_monotone_moves(inst.graph, inst.planted, 12, 5);
    const Graph edited = apply_monotone_moves(inst.graph, inst.planted, mv.moves);
    int removed = 0;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& m : mv.moves) {
      if (m.kind == MoveKind::RemoveCutEdge) ++removed;
      pairs.emplace_back(m.u, m.v);
    }
    const CorrectionVector d = monotone_d_update(inst.graph, inst.planted, rep.d_best, pairs);
    CHECK(std::fabs(eval_g_value(edited, d) - (rep.best_cut - removed)) <= 1e-8);
  }
}

TEST_CASE("structure report aggregation and JSON") {
  const Fixture f = make_fixture("path");
  const SolveReport sr = solve(f.graph);
  const StructureReport rep = analyze_structure(f.graph, f.reference, &sr.d_best);
  CHECK(rep.has_alpha);
  CHECK(rep.d_y == correction_from_bisection(f.graph, f.reference));
  bool has_path = false;
  for (const auto& v : rep.violations) has_path |= v.kind == "path_segment";
  CHECK(has_path);

  const std::string j = structure_report_to_json(rep);
  CHECK(j.find("\"kind\": \"path_segment\"") != std::string::npos);
  CHECK(j.find("\"u_prime\": 3") != std::string::npos);

  const StructureReport bare = analyze_structure(f.graph, f.reference);
  CHECK_FALSE(bare.has_alpha);
  CHECK(structure_report_to_json(bare).find("\"alpha\": null") != std::string::npos);

  const Fixture iso = make_fixture("isolated");
  const StructureReport irep = analyze_structure(iso.graph, iso.reference);
  bool has_iso = false;
  for (const auto& v : irep.violations) has_iso |= v.kind == "isolated_pair";
  CHECK(has_iso);

  const Fixture lat = make_fixture("lattice");
  const StructureReport lrep = analyze_structure(lat.graph, lat.reference);
  bool has_lat = false;
  for (const auto& v : lrep.violations) has_lat |= v.kind == "lattice";
  CHECK(has_lat);
}
