#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdp/errors.hpp"
#include "pdp/pairing.hpp"

namespace pdp {

// A dart is one side of an edge: dart 2e   runs edge[e].u -> edge[e].v,
//                                dart 2e+1 runs edge[e].v -> edge[e].u.
using Dart = int;

inline Dart make_dart(int edge, int dir) { return edge * 2 + dir; }
inline int dart_edge(Dart d) { return d >> 1; }
inline int dart_dir(Dart d) { return d & 1; }
inline Dart reversed(Dart d) { return d ^ 1; }

struct Edge {
  int u = 0;
  int v = 0;
  long long weight = 1;
};

inline constexpr long long kMaxEdgeWeight = 1'000'000;

// Undirected planar graph with a combinatorial embedding. Rotations list the
// darts leaving each vertex in clockwise order; the traced boundary walks
// then run counter-clockwise (each face lies to the left of its boundary
// darts). Multi-edges are fine; self-loops are rejected on input and only
// appear in dual graphs.
class PlanarGraph {
 public:
  PlanarGraph() = default;  // empty placeholder; not a usable embedding

  // Input form: rotations given as edge indices around each vertex.
  PlanarGraph(int n, std::vector<Edge> edges,
              const std::vector<std::vector<int>>& rotations);

  // Internal form (used by dual construction): explicit dart rotations.
  static PlanarGraph from_dart_rotations(int n, std::vector<Edge> edges,
                                         std::vector<std::vector<Dart>> rotations,
                                         bool allow_loops);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  int tail(Dart d) const {
    const Edge& e = edges_[dart_edge(d)];
    return dart_dir(d) == 0 ? e.u : e.v;
  }
  int head(Dart d) const { return tail(reversed(d)); }

  const std::vector<Dart>& rotation(int v) const { return rotations_[v]; }

  // Face-walk successor: arrive at head(d), leave along the next dart
  // clockwise around that vertex.
  Dart next_face_dart(Dart d) const;

  bool all_unit_weights() const;

 private:
  void index_rotations(bool allow_loops);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> rotations_;
  std::vector<int> rotation_pos_;  // dart -> index within its tail's rotation
};

struct Face {
  int id = 0;
  std::vector<Dart> darts;  // closed boundary walk
  int boundary_length() const { return static_cast<int>(darts.size()); }
};

// A walk through the graph: vertices.size() == edges.size() + 1 and edge i
// joins vertices i and i+1 (edge ids disambiguate multi-edges).
struct Path {
  std::vector<int> vertices;
  std::vector<int> edges;

  long long weight(const PlanarGraph& g) const;
  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;
  int face_of(Dart d) const { return face_of_dart[d]; }
};

// Traces all boundary walks and validates the embedding: every dart lies on
// exactly one face and each connected component satisfies Euler's formula
// (a consistent but non-planar rotation system is rejected here).
FaceSet trace_faces(const PlanarGraph& g);

// Dual graph: one vertex per face, one edge per primal edge (same index).
// Dual dart (e, t) runs from the face left of primal dart (e, t) to the face
// right of it, i.e. it crosses primal dart (e, t) left-to-right.
struct DualGraph {
  PlanarGraph graph;
};

DualGraph dual_graph(const PlanarGraph& g, const FaceSet& faces);

enum class CaseTag { kOneFace, kTwoFaceParallel };

struct Instance {
  PlanarGraph graph;
  std::vector<std::pair<int, int>> terminals;  // (source s_i, sink t_i)
  CaseTag tag = CaseTag::kOneFace;
  // One anchor dart for the one-face case; for two-face-parallel the first
  // anchors the sources' face, the second the sinks' face.
  std::vector<Dart> face_anchors;
  bool edge_disjoint = false;

  int k() const { return static_cast<int>(terminals.size()); }
};

struct OneFaceLabeling {
  int face = 0;
  std::vector<int> label_of_vertex;  // 1..2k for terminals, 0 otherwise
  std::vector<int> vertex_of_label;  // [0] unused
  std::vector<std::pair<int, int>> label_pairs;  // (label(s_i), label(t_i))

  Pairing input_pairing() const {
    return Pairing(static_cast<int>(label_pairs.size()), label_pairs);
  }
};

// Labels the terminals 1..2k counter-clockwise along the designated face,
// starting from the anchor dart. Each terminal must sit on that boundary walk
// exactly once.
OneFaceLabeling face_labels(const Instance& instance, const FaceSet& faces);

// Checks all instance invariants (distinct terminals, terminals on their
// designated faces, weights within range, anchors valid) and returns the
// instance unchanged. Throws on violation.
Instance validate_instance(Instance instance);

}  // namespace pdp
