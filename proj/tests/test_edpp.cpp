#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdp/edpp.hpp"
#include "pdp/oracle.hpp"
#include "helpers.hpp"

using namespace pdp;
using pdp::testing::square_instance;

namespace {

GenSpec edpp_spec(unsigned long long seed, bool grid) {
  GenSpec spec;
  spec.seed = seed;
  spec.k = 2;
  spec.order = seed % 2 ? TerminalOrder::kSerial : TerminalOrder::kParallel;
  spec.edge_disjoint = true;
  if (grid) {
    spec.family = "grid";
    spec.rows = 3;
    spec.cols = 3;
  } else {
    spec.family = "random-planar";
    spec.n = 8;
    spec.chords = 5;
  }
  return spec;
}

int max_degree(const PlanarGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    best = std::max(best, static_cast<int>(g.rotation(v).size()));
  }
  return best;
}

}  // namespace

TEST_CASE("reduction caps every degree at three and stays planar") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    Instance inst = gen_instance(edpp_spec(seed, seed % 2 == 0));
    GadgetMap gm = reduce_edpp(inst);
    CHECK(max_degree(gm.reduced.graph) <= 3);
    CHECK_NOTHROW(trace_faces(gm.reduced.graph));  // Euler-checked embedding
    CHECK_NOTHROW(validate_instance(gm.reduced));
    // gadget edges never carry weight
    for (std::size_t e = 0; e < gm.edge_origin.size(); ++e) {
      if (gm.edge_origin[e] < 0) {
        CHECK(gm.reduced.graph.edge(static_cast<int>(e)).weight == 0);
      } else {
        CHECK(gm.reduced.graph.edge(static_cast<int>(e)).weight ==
              inst.graph.edge(gm.edge_origin[e]).weight);
      }
    }
  }
}

TEST_CASE("low-degree graphs only get the terminal stubs") {
  // square: all degrees 2, terminals relocated, nothing expanded
  Instance inst = square_instance({{0, 1}, {2, 3}});
  inst.edge_disjoint = true;
  GadgetMap gm = reduce_edpp(inst);
  CHECK(max_degree(gm.reduced.graph) <= 3);
  // 4 stub vertices appended, originals intact (degree 2 + stub = 3)
  CHECK(gm.reduced.graph.vertex_count() == 8);
  CHECK(gm.reduced.graph.edge_count() == 8);

  CountResult r = count_instance(gm.reduced);
  Enumeration e = enum_edge_disjoint_paths(inst, false);
  REQUIRE(r.exists());
  CHECK(r.min_length == e.min_length);
}

TEST_CASE("crossing demand chords are rejected") {
  Instance inst = square_instance({{0, 2}, {1, 3}});
  inst.edge_disjoint = true;
  CHECK_THROWS_WITH_AS(reduce_edpp(inst), doctest::Contains("CrossingDemands"),
                       Error);
}

TEST_CASE("a high-degree hub reduces and preserves the optimum") {
  // wheel: center 4 joined to all rim vertices of a square
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                             {0, 4}, {1, 4}, {2, 4}, {3, 4}};
  std::vector<std::vector<int>> rot = {
      {0, 3, 4}, {1, 0, 5}, {2, 1, 6}, {3, 2, 7}, {4, 7, 6, 5}};
  Instance inst;
  inst.graph = PlanarGraph(5, edges, rot);
  inst.terminals = {{0, 1}, {3, 2}};
  inst.tag = CaseTag::kOneFace;
  // anchor on the rim face (the one of boundary length 4)
  FaceSet faces = trace_faces(inst.graph);
  for (const Face& f : faces.faces) {
    if (f.boundary_length() == 4) inst.face_anchors = {f.darts.front()};
  }
  REQUIRE(!inst.face_anchors.empty());
  inst.edge_disjoint = true;
  inst = validate_instance(inst);

  GadgetMap gm = reduce_edpp(inst);
  CHECK(max_degree(gm.reduced.graph) <= 3);
  Enumeration e = enum_edge_disjoint_paths(inst, false);
  CountResult r = count_instance(gm.reduced);
  REQUIRE(e.exists());
  REQUIRE(r.exists());
  CHECK(r.min_length == e.min_length);

  Solution reduced_sol = greedy_search(gm.reduced);
  Solution lifted = lift_solution(gm, reduced_sol);
  CHECK(validate_edge_disjoint(inst, lifted));
  CHECK(lifted.total_length == e.min_length);
}

TEST_CASE("edge-disjoint optimum can use a shared vertex") {
  // two demands forced through the hub: edge-disjoint works, vertex-disjoint
  // cannot; the reduction must keep the edge-disjoint reading.
  std::vector<Edge> edges = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  std::vector<std::vector<int>> rot = {{0}, {1}, {2}, {3}, {0, 1, 2, 3}};
  Instance inst;
  inst.graph = PlanarGraph(5, edges, rot);
  inst.terminals = {{0, 1}, {3, 2}};
  inst.tag = CaseTag::kOneFace;
  inst.face_anchors = {make_dart(0, 0)};
  inst.edge_disjoint = true;
  inst = validate_instance(inst);

  Enumeration vertex_disjoint = enum_disjoint_paths(inst, false);
  CHECK(!vertex_disjoint.exists());
  Enumeration edge_disjoint = enum_edge_disjoint_paths(inst, false);
  REQUIRE(edge_disjoint.exists());
  CHECK(edge_disjoint.min_length == 4);

  GadgetMap gm = reduce_edpp(inst);
  CountResult r = count_instance(gm.reduced);
  REQUIRE(r.exists());
  CHECK(r.min_length == 4);
  Solution lifted = lift_solution(gm, greedy_search(gm.reduced));
  CHECK(validate_edge_disjoint(inst, lifted));
  CHECK(lifted.total_length == 4);
}

TEST_CASE("lift maps reduced optima onto edge-disjoint oracle optima") {
  for (unsigned seed = 1; seed <= 8; ++seed) {
    Instance inst = gen_instance(edpp_spec(seed * 13, seed % 2 == 0));
    Enumeration e = enum_edge_disjoint_paths(inst, false);
    GadgetMap gm = reduce_edpp(inst);
    CountResult r = count_instance(gm.reduced);
    if (!e.exists()) {
      CHECK(!r.exists());
      continue;
    }
    REQUIRE(r.exists());
    CHECK(r.min_length == e.min_length);
    Solution lifted = lift_solution(gm, greedy_search(gm.reduced));
    CHECK(validate_edge_disjoint(inst, lifted));
    CHECK(lifted.total_length == e.min_length);
  }
}

TEST_CASE("weighted EDPP preserves weighted optima") {
  GenSpec spec = edpp_spec(21, true);
  spec.max_weight = 3;
  Instance inst = gen_instance(spec);
  Enumeration e = enum_edge_disjoint_paths(inst, false);
  GadgetMap gm = reduce_edpp(inst);
  CountResult r = count_instance(gm.reduced);
  REQUIRE(e.exists());
  REQUIRE(r.exists());
  CHECK(r.min_length == e.min_length);
  Solution lifted = lift_solution(gm, greedy_search(gm.reduced));
  CHECK(validate_edge_disjoint(inst, lifted));
  CHECK(lifted.total_length == e.min_length);
}
