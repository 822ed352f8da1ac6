#include "pdp/graph.hpp"

#include <algorithm>
#include <numeric>

namespace pdp {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlanarGraph::PlanarGraph(int n, std::vector<Edge> edges,
                         const std::vector<std::vector<int>>& rotations) {
  n_ = n;
  if (n <= 0) fail(ErrorCode::BadInstanceFile, "vertex count must be positive");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n) {
      fail(ErrorCode::BadInstanceFile, "edge endpoint out of range");
    }
    if (ed.u == ed.v) {
      fail(ErrorCode::SelfLoop, "self-loop on edge " + std::to_string(e));
    }
  }
  edges_ = std::move(edges);
  if (static_cast<int>(rotations.size()) != n) {
    fail(ErrorCode::InconsistentEmbedding, "rotation list size != vertex count");
  }
  rotations_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    rotations_[v].reserve(rotations[v].size());
    for (int e : rotations[v]) {
      if (e < 0 || e >= edge_count()) {
        fail(ErrorCode::InconsistentEmbedding, "rotation names unknown edge");
      }
      if (edges_[e].u == v) {
        rotations_[v].push_back(make_dart(e, 0));
      } else if (edges_[e].v == v) {
        rotations_[v].push_back(make_dart(e, 1));
      } else {
        fail(ErrorCode::InconsistentEmbedding,
             "rotation of vertex " + std::to_string(v) +
                 " names non-incident edge " + std::to_string(e));
      }
    }
  }
  index_rotations(/*allow_loops=*/false);
}

PlanarGraph PlanarGraph::from_dart_rotations(
    int n, std::vector<Edge> edges, std::vector<std::vector<Dart>> rotations,
    bool allow_loops) {
  PlanarGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.rotations_ = std::move(rotations);
  if (static_cast<int>(g.rotations_.size()) != n) {
    fail(ErrorCode::InconsistentEmbedding, "rotation list size != vertex count");
  }
  g.index_rotations(allow_loops);
  return g;
}

void PlanarGraph::index_rotations(bool allow_loops) {
  if (!allow_loops) {
    for (const Edge& e : edges_) {
      if (e.u == e.v) fail(ErrorCode::SelfLoop, "self-loop");
    }
  }
  rotation_pos_.assign(edges_.size() * 2, -1);
  for (int v = 0; v < n_; ++v) {
    for (std::size_t i = 0; i < rotations_[v].size(); ++i) {
      Dart d = rotations_[v][i];
      if (d < 0 || d >= static_cast<int>(edges_.size()) * 2) {
        fail(ErrorCode::InconsistentEmbedding, "rotation names unknown dart");
      }
      if (tail(d) != v) {
        fail(ErrorCode::InconsistentEmbedding,
             "dart listed at a vertex that is not its tail");
      }
      if (rotation_pos_[d] != -1) {
        fail(ErrorCode::InconsistentEmbedding,
             "dart appears twice in the rotation system");
      }
      rotation_pos_[d] = static_cast<int>(i);
    }
  }
  for (std::size_t d = 0; d < rotation_pos_.size(); ++d) {
    if (rotation_pos_[d] == -1) {
      fail(ErrorCode::InconsistentEmbedding,
           "dart missing from the rotation system");
    }
  }
}

Dart PlanarGraph::next_face_dart(Dart d) const {
  Dart arrive = reversed(d);
  int v = tail(arrive);
  const auto& rot = rotations_[v];
  int pos = rotation_pos_[arrive];
  return rot[(pos + 1) % rot.size()];
}

bool PlanarGraph::all_unit_weights() const {
  for (const Edge& e : edges_) {
    if (e.weight != 1) return false;
  }
  return true;
}

long long Path::weight(const PlanarGraph& g) const {
  long long total = 0;
  for (int e : edges) total += g.edge(e).weight;
  return total;
}

FaceSet trace_faces(const PlanarGraph& g) {
  const int dart_count = g.edge_count() * 2;
  FaceSet fs;
  fs.face_of_dart.assign(dart_count, -1);
  for (Dart d0 = 0; d0 < dart_count; ++d0) {
    if (fs.face_of_dart[d0] != -1) continue;
    Face face;
    face.id = static_cast<int>(fs.faces.size());
    Dart d = d0;
    do {
      if (fs.face_of_dart[d] != -1) {
        fail(ErrorCode::InconsistentEmbedding, "face walks collide");
      }
      fs.face_of_dart[d] = face.id;
      face.darts.push_back(d);
      d = g.next_face_dart(d);
    } while (d != d0);
    fs.faces.push_back(std::move(face));
  }

  // Per-component Euler check; catches rotation systems of positive genus.
  Dsu dsu(g.vertex_count());
  for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
  std::vector<int> comp_edges(g.vertex_count(), 0);
  std::vector<int> comp_faces(g.vertex_count(), 0);
  std::vector<int> comp_vertices(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++comp_vertices[dsu.find(v)];
  for (const Edge& e : g.edges()) ++comp_edges[dsu.find(e.u)];
  for (const Face& f : fs.faces) {
    ++comp_faces[dsu.find(g.tail(f.darts.front()))];
  }
  for (int c = 0; c < g.vertex_count(); ++c) {
    if (dsu.find(c) != c || comp_edges[c] == 0) continue;
    if (comp_vertices[c] - comp_edges[c] + comp_faces[c] != 2) {
      fail(ErrorCode::InconsistentEmbedding,
           "rotation system is not a planar embedding (Euler check failed)");
    }
  }
  return fs;
}

DualGraph dual_graph(const PlanarGraph& g, const FaceSet& faces) {
  const int face_count = static_cast<int>(faces.faces.size());
  std::vector<Edge> dual_edges(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    dual_edges[e].u = faces.face_of(make_dart(e, 0));
    dual_edges[e].v = faces.face_of(make_dart(e, 1));
    dual_edges[e].weight = g.edge(e).weight;
  }
  std::vector<std::vector<Dart>> rotations(face_count);
  for (const Face& f : faces.faces) {
    rotations[f.id].reserve(f.darts.size());
    for (Dart d : f.darts) {
      // The dual dart with tail f is the one aligned with the primal dart.
      rotations[f.id].push_back(make_dart(dart_edge(d), dart_dir(d)));
    }
  }
  DualGraph dual{PlanarGraph::from_dart_rotations(
      face_count, std::move(dual_edges), std::move(rotations),
      /*allow_loops=*/true)};
  return dual;
}

OneFaceLabeling face_labels(const Instance& instance, const FaceSet& faces) {
  if (instance.face_anchors.empty()) {
    fail(ErrorCode::BadCaseTag, "one-face instance needs a face anchor");
  }
  const PlanarGraph& g = instance.graph;
  const Dart anchor = instance.face_anchors[0];
  if (anchor < 0 || anchor >= g.edge_count() * 2) {
    fail(ErrorCode::BadInstanceFile, "face anchor dart out of range");
  }
  const Face& face = faces.faces[faces.face_of(anchor)];

  OneFaceLabeling lab;
  lab.face = face.id;
  lab.label_of_vertex.assign(g.vertex_count(), 0);

  std::vector<bool> is_terminal(g.vertex_count(), false);
  for (const auto& [s, t] : instance.terminals) {
    is_terminal[s] = is_terminal[t] = true;
  }

  // Walk the face starting at the anchor, labelling terminals as they appear.
  const int start =
      static_cast<int>(std::find(face.darts.begin(), face.darts.end(), anchor) -
                       face.darts.begin());
  const int blen = face.boundary_length();
  int next_label = 1;
  lab.vertex_of_label.assign(2 * instance.k() + 1, -1);
  for (int i = 0; i < blen; ++i) {
    int v = g.tail(face.darts[(start + i) % blen]);
    if (!is_terminal[v]) continue;
    if (lab.label_of_vertex[v] != 0) {
      fail(ErrorCode::TerminalRepeatsOnBoundary,
           "terminal " + std::to_string(v) +
               " occurs twice on the designated face (cut vertex)");
    }
    lab.label_of_vertex[v] = next_label;
    lab.vertex_of_label[next_label] = v;
    ++next_label;
  }
  for (const auto& [s, t] : instance.terminals) {
    if (lab.label_of_vertex[s] == 0 || lab.label_of_vertex[t] == 0) {
      fail(ErrorCode::TerminalNotOnFace,
           "terminal not on the designated face boundary");
    }
    lab.label_pairs.emplace_back(lab.label_of_vertex[s], lab.label_of_vertex[t]);
  }
  return lab;
}

Instance validate_instance(Instance instance) {
  const PlanarGraph& g = instance.graph;
  if (instance.k() < 1) {
    fail(ErrorCode::BadCaseTag, "instance needs at least one terminal pair");
  }
  for (const Edge& e : g.edges()) {
    if (e.weight < 0 || e.weight > kMaxEdgeWeight) {
      fail(ErrorCode::WeightOutOfRange,
           "edge weight " + std::to_string(e.weight) + " outside [0, " +
               std::to_string(kMaxEdgeWeight) + "]");
    }
  }
  std::vector<int> seen(g.vertex_count(), 0);
  for (const auto& [s, t] : instance.terminals) {
    if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count()) {
      fail(ErrorCode::BadInstanceFile, "terminal vertex out of range");
    }
    if (seen[s]++ || seen[t]++) {
      fail(ErrorCode::DuplicateTerminal, "terminals must be 2k distinct vertices");
    }
  }

  FaceSet faces = trace_faces(g);
  for (Dart a : instance.face_anchors) {
    if (a < 0 || a >= g.edge_count() * 2) {
      fail(ErrorCode::BadInstanceFile, "face anchor dart out of range");
    }
  }

  if (instance.tag == CaseTag::kOneFace) {
    if (instance.face_anchors.size() != 1) {
      fail(ErrorCode::BadCaseTag, "one-face instance needs exactly one anchor");
    }
    face_labels(instance, faces);  // throws if terminals misplaced
  } else {
    if (instance.face_anchors.size() != 2) {
      fail(ErrorCode::BadCaseTag,
           "two-face-parallel instance needs exactly two anchors");
    }
    int f_src = faces.face_of(instance.face_anchors[0]);
    int f_snk = faces.face_of(instance.face_anchors[1]);
    if (f_src == f_snk) {
      fail(ErrorCode::BadCaseTag, "the two designated faces must differ");
    }
    auto occurrences_on = [&](int face_id, int v) {
      int count = 0;
      for (Dart d : faces.faces[face_id].darts) {
        if (g.tail(d) == v) ++count;
      }
      return count;
    };
    for (const auto& [s, t] : instance.terminals) {
      int s_on_src = occurrences_on(f_src, s);
      int t_on_snk = occurrences_on(f_snk, t);
      if (s_on_src == 0) {
        if (occurrences_on(f_snk, s) > 0) {
          fail(ErrorCode::BadCaseTag, "source lies on the sinks' face");
        }
        fail(ErrorCode::TerminalNotOnFace, "source not on the sources' face");
      }
      if (t_on_snk == 0) {
        if (occurrences_on(f_src, t) > 0) {
          fail(ErrorCode::BadCaseTag, "sink lies on the sources' face");
        }
        fail(ErrorCode::TerminalNotOnFace, "sink not on the sinks' face");
      }
      if (s_on_src > 1 || t_on_snk > 1) {
        fail(ErrorCode::TerminalRepeatsOnBoundary,
             "terminal occurs twice on its designated face");
      }
    }
  }
  return instance;
}

}  // namespace pdp
