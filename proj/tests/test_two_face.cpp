#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdp/oracle.hpp"
#include "pdp/two_face.hpp"
#include "helpers.hpp"

using namespace pdp;
using pdp::testing::ladder_spec;

namespace {

struct SolvedParts {
  FaceSet faces;
  Axis axis;
  TwoFaceLabeling labels;
  OffsetSpec offsets;
};

SolvedParts solve_parts(const Instance& inst) {
  SolvedParts parts{trace_faces(inst.graph), {}, {}, {}};
  parts.axis = find_axis(inst, parts.faces);
  parts.labels = two_face_labels(inst, parts.faces, parts.axis);
  parts.offsets = offset(parts.labels);
  return parts;
}

}  // namespace

TEST_CASE("axis on the 8-vertex circular ladder crosses two ring arcs") {
  Instance inst = gen_instance(ladder_spec(3, 4, 2));
  SolvedParts parts = solve_parts(inst);
  CHECK(parts.axis.steps.size() == 2);
  // one inner-ring edge and one outer-ring edge, never a spoke
  for (const AxisStep& step : parts.axis.steps) {
    const Edge& e = inst.graph.edge(step.edge);
    int ring_u = e.u / 4, ring_v = e.v / 4;
    CHECK(ring_u == ring_v);  // ring edges stay within one ring
  }
}

TEST_CASE("adjacent terminal faces give an axis of length one") {
  // triangle: inner and outer face share every edge
  PlanarGraph tri(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 2}, {1, 0}, {2, 1}});
  Instance inst;
  inst.graph = tri;
  inst.terminals = {{0, 1}};
  inst.tag = CaseTag::kTwoFaceParallel;
  FaceSet faces = trace_faces(inst.graph);
  inst.face_anchors = {faces.faces[0].darts.front(),
                       faces.faces[1].darts.front()};
  Instance checked = validate_instance(inst);
  Axis axis = find_axis(checked, faces);
  CHECK(axis.steps.size() == 1);
  CountResult r = count_two_face(checked);
  Enumeration e = enum_disjoint_paths(checked, false);
  CHECK(r.exists());
  CHECK(r.min_length == e.min_length);
  CHECK(r.count == e.count_at_min);
}

TEST_CASE("disconnected input has no dual path") {
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  std::vector<std::vector<int>> rot = {{0, 2}, {1, 0}, {2, 1},
                                       {3, 5}, {4, 3}, {5, 4}};
  Instance inst;
  inst.graph = PlanarGraph(6, edges, rot);
  inst.terminals = {{0, 3}};
  inst.tag = CaseTag::kTwoFaceParallel;
  FaceSet faces = trace_faces(inst.graph);
  inst.face_anchors = {make_dart(0, 0), make_dart(3, 0)};
  CHECK(faces.face_of(make_dart(0, 0)) != faces.face_of(make_dart(3, 0)));
  CHECK_THROWS_WITH_AS(find_axis(inst, faces), doctest::Contains("NoDualPath"),
                       Error);
}

TEST_CASE("ladder labels: sinks get 1..k, sources k+1..2k") {
  Instance inst = gen_instance(ladder_spec(1, 4, 2));
  SolvedParts parts = solve_parts(inst);
  for (const auto& [s, t] : inst.terminals) {
    CHECK(parts.labels.label_of_vertex[t] >= 1);
    CHECK(parts.labels.label_of_vertex[t] <= 2);
    CHECK(parts.labels.label_of_vertex[s] >= 3);
    CHECK(parts.labels.label_of_vertex[s] <= 4);
  }
}

TEST_CASE("offsets: aligned pairings get a common shift, swaps break it") {
  OffsetSpec aligned = offset({{}, {}, {{1, 4}, {2, 5}, {3, 6}},
                               {0, 1, 2}, {0, 1, 2}});
  CHECK(aligned.consistent());
  CHECK(*aligned.common == 0);

  OffsetSpec shifted = offset({{}, {}, {{1, 4}, {2, 5}, {3, 6}},
                               {0, 1, 2}, {1, 2, 0}});
  CHECK(shifted.consistent());
  CHECK(*shifted.common == 1);

  OffsetSpec broken = offset({{}, {}, {{1, 3}, {2, 4}}, {0, 1}, {0, 0}});
  CHECK(!broken.consistent());
}

TEST_CASE("straight-spoke ladder counts one shortest system") {
  Instance inst = gen_instance(ladder_spec(3, 4, 2, 0));
  TwoFaceDiagnostics diag;
  CountResult r = count_two_face(inst, {}, {}, &diag);
  CHECK(diag.offsets.consistent());
  CHECK(*diag.offsets.common == 0);
  CHECK(r.exists());
  CHECK(r.min_length == 2);  // two unit spokes
  CHECK(r.count == 1);
}

TEST_CASE("saturated rotated ladder has no routing") {
  // k = spokes = 3, shift 1: every rotated path must pass another terminal
  Instance inst = gen_instance(ladder_spec(2, 3, 3, 1));
  CountResult r = count_two_face(inst);
  CHECK(!r.exists());
  Enumeration e = enum_disjoint_paths(inst, false);
  CHECK(!e.exists());
}

TEST_CASE("k=1 annulus equals the shortest-path count") {
  for (unsigned seed = 1; seed <= 6; ++seed) {
    Instance inst = gen_instance(ladder_spec(seed, 3 + seed % 3, 1, seed % 2));
    CountResult r = count_two_face(inst);
    Enumeration e = enum_disjoint_paths(inst, false);
    REQUIRE(e.exists());
    CHECK(r.min_length == e.min_length);
    CHECK(r.count == e.count_at_min);
  }
}

TEST_CASE("inconsistent demand offsets yield zero immediately") {
  GenSpec spec = ladder_spec(5, 5, 3, 1);
  spec.mismatch = true;
  Instance inst = gen_instance(spec);
  TwoFaceDiagnostics diag;
  CountResult r = count_two_face(inst, {}, {}, &diag);
  CHECK(!diag.offsets.consistent());
  CHECK(!r.exists());
  CHECK(!enum_disjoint_paths(inst, false, 20).exists());
}

TEST_CASE("axis crossing arithmetic on hand paths") {
  Instance inst = gen_instance(ladder_spec(3, 4, 2, 0));
  SolvedParts parts = solve_parts(inst);

  // A straight spoke never touches the crossed ring edges.
  int s = inst.terminals[0].first, t = inst.terminals[0].second;
  int spoke_edge = -1;
  for (int e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& ed = inst.graph.edge(e);
    if ((ed.u == s && ed.v == t) || (ed.u == t && ed.v == s)) spoke_edge = e;
  }
  REQUIRE(spoke_edge >= 0);
  Path spoke{{s, t}, {spoke_edge}};
  CHECK(axis_cross(inst.graph, parts.axis, {spoke}) == 0);

  // Traversing a crossed edge along its positive dart counts +1, the
  // reverse -1.
  const AxisStep& step = parts.axis.steps.front();
  const Edge& e = inst.graph.edge(step.edge);
  int from = inst.graph.tail(step.positive_dart);
  int to = inst.graph.head(step.positive_dart);
  Path forward{{from, to}, {step.edge}};
  Path backward{{to, from}, {step.edge}};
  CHECK(axis_cross(inst.graph, parts.axis, {forward}) == 1);
  CHECK(axis_cross(inst.graph, parts.axis, {backward}) == -1);
  (void)e;
}

TEST_CASE("every cover lands in the class of its realized pairing") {
  for (unsigned seed = 1; seed <= 8; ++seed) {
    int spokes = 3 + static_cast<int>(seed % 3);
    int k = 2 + static_cast<int>(seed % 2);
    if (k > spokes) continue;
    Instance inst = gen_instance(ladder_spec(seed * 17, spokes, k, seed % spokes));
    SolvedParts parts = solve_parts(inst);
    if (!parts.offsets.consistent()) continue;
    int o_m = *parts.offsets.common;
    ModifiedGraph mg(inst.graph, parts.labels.vertex_of_label,
                     parts.labels.input_pairing());
    std::vector<int> shift = parts.axis.dart_shift(inst.graph.edge_count() * 2);
    Pairing m0 = parts.labels.input_pairing();
    enum_cycle_covers(
        mg,
        [&](const Cover& c) {
          Pairing realized(mg.k(), c.realized_label_pairs);
          int cls = ((c.net_axis_cross % k) + k) % k;
          if (realized == m0) {
            CHECK(cls == o_m);
          } else {
            CHECK(cls != o_m);
          }
        },
        &shift);
  }
}

TEST_CASE("winding is uniform across the paths of a routing") {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    Instance inst = gen_instance(ladder_spec(seed * 29, 4, 2, seed % 2));
    SolvedParts parts = solve_parts(inst);
    Enumeration e = enum_disjoint_paths(inst);
    if (!e.exists()) continue;
    REQUIRE(!e.tuples.empty());
    const Solution& ref = e.tuples.front();
    for (const Solution& sol : e.tuples) {
      int common_delta = 0;
      for (std::size_t i = 0; i < sol.paths.size(); ++i) {
        int delta = axis_cross(inst.graph, parts.axis, {sol.paths[i]}) -
                    axis_cross(inst.graph, parts.axis, {ref.paths[i]});
        if (i == 0) {
          common_delta = delta;
        } else {
          CHECK(delta == common_delta);
        }
      }
    }
  }
}

TEST_CASE("no three demands pairwise interlace on feasible instances") {
  // order-reversing triple = the forbidden pattern; the aligned triple is fine
  CHECK(has_three_pairwise_interlacing(Pairing(3, {{1, 6}, {2, 5}, {3, 4}})));
  CHECK(!has_three_pairwise_interlacing(Pairing(3, {{1, 4}, {2, 5}, {3, 6}})));
  for (unsigned seed = 1; seed <= 10; ++seed) {
    int spokes = 4 + static_cast<int>(seed % 3);
    Instance inst = gen_instance(ladder_spec(seed * 7, spokes, 3, seed % 3));
    SolvedParts parts = solve_parts(inst);
    CountResult r = count_two_face(inst);
    if (r.exists()) {
      CHECK(!has_three_pairwise_interlacing(parts.labels.input_pairing()));
    }
  }
}

TEST_CASE("counts match the oracle on mixed annuli") {
  for (unsigned seed = 1; seed <= 12; ++seed) {
    GenSpec spec = ladder_spec(seed * 5, 3 + seed % 3, 1 + seed % 3,
                               seed % 3, 2 + seed % 2);
    if (spec.k > spec.spokes) spec.k = spec.spokes;
    if (seed % 4 == 0) spec.max_weight = 3;
    Instance inst = gen_instance(spec);
    CountResult r = count_two_face(inst);
    Enumeration e = enum_disjoint_paths(inst, false, 20);
    if (e.exists()) {
      CHECK(r.exists());
      CHECK(r.min_length == e.min_length);
      CHECK(r.count == e.count_at_min);
    } else {
      CHECK(!r.exists());
    }
  }
}

TEST_CASE("any valid axis yields the same counts") {
  Instance inst = gen_instance(ladder_spec(9, 4, 2, 1));
  FaceSet faces = trace_faces(inst.graph);
  Axis axis = find_axis(inst, faces);
  CountResult reference = count_two_face(inst);

  // Re-route the axis through every quad face between the rings and re-count
  // by hand: class selection shifts with the labels, counts stay put.
  const int f_src = faces.face_of(inst.face_anchors[0]);
  const int f_snk = faces.face_of(inst.face_anchors[1]);
  int alternates = 0;
  for (const Face& mid : faces.faces) {
    if (mid.id == f_src || mid.id == f_snk) continue;
    int cross_out = -1, cross_in = -1;
    for (Dart d : mid.darts) {
      if (faces.face_of(reversed(d)) == f_src) cross_out = reversed(d);
      if (faces.face_of(reversed(d)) == f_snk) cross_in = d;
    }
    if (cross_out < 0 || cross_in < 0) continue;
    // cross_out: dart on the f_src side; the positive dart of a step is the
    // one whose face is the step's destination.
    Axis alt;
    alt.face_path = {f_src, mid.id, f_snk};
    alt.steps = {{dart_edge(cross_out), reversed(cross_out)},
                 {dart_edge(cross_in), reversed(cross_in)}};
    alt.source_face_dart = cross_out;
    alt.sink_face_dart = reversed(cross_in);
    ++alternates;

    TwoFaceLabeling labels = two_face_labels(inst, faces, alt);
    OffsetSpec offs = offset(labels);
    REQUIRE(offs.consistent());
    ModifiedGraph mg(inst.graph, labels.vertex_of_label, labels.input_pairing());
    std::vector<int> shift = alt.dart_shift(inst.graph.edge_count() * 2);
    CyclicPoly det = det_cyclic_poly(mg.cyclic_matrix(inst.k(), shift));
    CountResult r = extract_count(det.coeff(*offs.common), mg);
    CHECK(r.exists() == reference.exists());
    CHECK(r.min_length == reference.min_length);
    CHECK(r.count == reference.count);
  }
  CHECK(alternates >= 2);
  (void)axis;
}
