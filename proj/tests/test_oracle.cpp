#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdp/instance_io.hpp"
#include "pdp/one_face.hpp"
#include "pdp/oracle.hpp"
#include "helpers.hpp"

using namespace pdp;
using pdp::testing::path3_instance;
using pdp::testing::square_instance;

TEST_CASE("path enumeration on hand instances") {
  Enumeration p = enum_disjoint_paths(path3_instance());
  CHECK(p.min_length == 2);
  CHECK(p.count_at_min == 1);
  CHECK(p.total == 1);

  Enumeration serial = enum_disjoint_paths(square_instance({{0, 1}, {2, 3}}));
  CHECK(serial.min_length == 2);
  CHECK(serial.count_at_min == 1);

  Enumeration crossing = enum_disjoint_paths(square_instance({{0, 2}, {1, 3}}));
  CHECK(!crossing.exists());
}

TEST_CASE("enumeration respects the size bound") {
  GenSpec spec;
  spec.family = "grid";
  spec.rows = 3;
  spec.cols = 3;
  spec.k = 1;
  Instance inst = gen_instance(spec);
  CHECK_THROWS_WITH_AS(enum_disjoint_paths(inst, false, 4),
                       doctest::Contains("InstanceTooLarge"), Error);
}

TEST_CASE("cover tally matches the determinant on the 2-path instance") {
  Instance inst = path3_instance();
  FaceSet faces = trace_faces(inst.graph);
  OneFaceLabeling labels = face_labels(inst, faces);
  ModifiedGraph mg(inst.graph, labels.vertex_of_label, labels.input_pairing());
  CoverTally tally = tally_covers(mg);
  Poly from_covers = tally_polynomial(tally.by_degree);
  CHECK(from_covers == pairing_determinant(mg));
  // a single good cover: one 4-cycle through s, r, t, a; sign -1 at degree 2
  CHECK(from_covers == Poly::monomial(BigInt(-1), 2));
}

TEST_CASE("cover tally equals the determinant across generated instances") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    GenSpec spec;
    spec.seed = seed * 19;
    spec.k = 1 + seed % 2;
    spec.order = static_cast<TerminalOrder>(seed % 3);
    spec.family = seed % 2 ? "grid" : "random-planar";
    spec.rows = 2;
    spec.cols = 3;
    spec.n = 7;
    spec.chords = 3;
    if (seed % 3 == 0) spec.max_weight = 2;
    Instance inst = gen_instance(spec);
    FaceSet faces = trace_faces(inst.graph);
    OneFaceLabeling labels = face_labels(inst, faces);
    Pairing m0 = labels.input_pairing();
    if (!is_noncrossing(m0)) continue;
    for (const TelescopeEntry& entry : telescope(m0).entries) {
      ModifiedGraph mg(inst.graph, labels.vertex_of_label, entry.pairing);
      CHECK(tally_polynomial(tally_covers(mg).by_degree) ==
            pairing_determinant(mg));
    }
  }
}

TEST_CASE("covers report sign by cycle parity") {
  Instance inst = path3_instance();
  FaceSet faces = trace_faces(inst.graph);
  OneFaceLabeling labels = face_labels(inst, faces);
  ModifiedGraph mg(inst.graph, labels.vertex_of_label, labels.input_pairing());
  int covers = 0;
  enum_cycle_covers(mg, [&](const Cover& c) {
    ++covers;
    CHECK(c.cycle_count == 1);
    CHECK(c.degree == 2);
    CHECK(c.sign(mg.vertex_count()) == -1);  // (-1)^{4+1}
    CHECK(!c.extra_nontrivial_cycle);
  });
  CHECK(covers == 1);
}

TEST_CASE("generators are deterministic") {
  GenSpec spec;
  spec.family = "grid";
  spec.rows = 3;
  spec.cols = 3;
  spec.k = 2;
  spec.seed = 1;
  spec.order = TerminalOrder::kParallel;
  CHECK(instance_to_json(gen_instance(spec)) ==
        instance_to_json(gen_instance(spec)));

  GenSpec annulus = pdp::testing::ladder_spec(1, 4, 2);
  CHECK(instance_to_json(gen_instance(annulus)) ==
        instance_to_json(gen_instance(annulus)));

  GenSpec other = spec;
  other.seed = 2;
  CHECK(instance_to_json(gen_instance(spec)) !=
        instance_to_json(gen_instance(other)));
}

TEST_CASE("parallel placement labels as the parallel pairing") {
  for (unsigned seed = 1; seed <= 6; ++seed) {
    GenSpec spec;
    spec.family = "grid";
    spec.rows = 3;
    spec.cols = 3;
    spec.k = 2 + seed % 2;
    spec.order = TerminalOrder::kParallel;
    spec.seed = seed;
    Instance inst = gen_instance(spec);
    FaceSet faces = trace_faces(inst.graph);
    OneFaceLabeling labels = face_labels(inst, faces);
    CHECK(labels.input_pairing() == Pairing::parallel_pairing(inst.k()));
  }
}

TEST_CASE("generator parameter validation") {
  GenSpec spec = pdp::testing::ladder_spec(1, 4, 5);
  CHECK_THROWS_WITH_AS(gen_instance(spec), doctest::Contains("BadParams"),
                       Error);
  GenSpec bad_family;
  bad_family.family = "torus";
  CHECK_THROWS_AS(gen_instance(bad_family), Error);
  GenSpec mismatch2 = pdp::testing::ladder_spec(1, 4, 2);
  mismatch2.mismatch = true;
  CHECK_THROWS_AS(gen_instance(mismatch2), Error);
}

TEST_CASE("serial placement labels as the serial pairing") {
  GenSpec spec;
  spec.family = "random-planar";
  spec.n = 10;
  spec.chords = 2;
  spec.k = 3;
  spec.order = TerminalOrder::kSerial;
  spec.seed = 9;
  Instance inst = gen_instance(spec);
  FaceSet faces = trace_faces(inst.graph);
  OneFaceLabeling labels = face_labels(inst, faces);
  std::vector<std::pair<int, int>> expected = {{1, 2}, {3, 4}, {5, 6}};
  CHECK(labels.input_pairing() == Pairing(3, expected));
}
