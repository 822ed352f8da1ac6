#pragma once

#include <optional>

#include "pdp/det.hpp"
#include "pdp/modify.hpp"
#include "pdp/one_face.hpp"

namespace pdp {

// One dual step of the axis. positive_dart is the orientation of the crossed
// primal edge that counts +1 (weight y); its reverse counts -1 (weight
// y^{-1} = y^{k-1}).
struct AxisStep {
  int edge = -1;
  Dart positive_dart = -1;
};

struct Axis {
  std::vector<AxisStep> steps;
  std::vector<int> face_path;  // dual vertices from the sources' face to the sinks'
  // Boundary darts of the crossed edges on the terminal faces; they anchor
  // the two label sweeps.
  Dart source_face_dart = -1;  // on the sources' face, first crossed edge
  Dart sink_face_dart = -1;    // on the sinks' face, last crossed edge

  // y-exponent for every dart of the primal graph (+1 / -1 / 0).
  std::vector<int> dart_shift(int dart_count) const;
};

// Shortest dual path from the sources' face to the sinks' face, preferring
// routes whose crossed edges avoid terminals, ties broken by the
// lexicographically least dual edge sequence.
Axis find_axis(const Instance& instance, const FaceSet& faces);

struct TwoFaceLabeling {
  std::vector<int> label_of_vertex;
  std::vector<int> vertex_of_label;
  // Per demand i: (label(t_i), label(s_i)); sinks carry 1..k, sources k+1..2k.
  std::vector<std::pair<int, int>> label_pairs;
  std::vector<int> source_position;  // rank of s_i around its face, from the axis
  std::vector<int> sink_position;    // rank of t_i around its face, from the axis

  Pairing input_pairing() const {
    return Pairing(static_cast<int>(label_pairs.size()), label_pairs);
  }
};

// Both faces are swept in the same rotational direction around the annulus,
// starting at the axis: the sinks' face along its boundary walk from the
// crossing dart, the sources' face against its walk.
TwoFaceLabeling two_face_labels(const Instance& instance, const FaceSet& faces,
                                const Axis& axis);

struct OffsetSpec {
  int k = 0;
  std::vector<int> demand_offsets;   // (sink rank - source rank) mod k
  std::optional<int> common;         // O_M when all demands agree

  bool consistent() const { return common.has_value(); }
};

OffsetSpec offset(const TwoFaceLabeling& labeling);

// Net signed axis crossings of a set of routed paths.
int axis_cross(const PlanarGraph& graph, const Axis& axis,
               const std::vector<Path>& paths);

struct TwoFaceDiagnostics {
  Axis axis;
  TwoFaceLabeling labeling;
  OffsetSpec offsets;
};

// Shortest-system count for a two-face-parallel instance: determinant over
// Z[x][y]/(y^k - 1) with axis arcs weighted y^{+-1}, then the y-class
// congruent to O_M holds exactly the pure covers of the input pairing.
CountResult count_two_face(const Instance& instance,
                           const CountOverrides& overrides = {},
                           const DetOptions& opt = {},
                           TwoFaceDiagnostics* diagnostics = nullptr);

bool decide_two_face(const Instance& instance, long long budget,
                     const DetOptions& opt = {});

// Instance diagnostic: no three demand chords may pairwise interlace when a
// routing exists.
bool has_three_pairwise_interlacing(const Pairing& m);

}  // namespace pdp
