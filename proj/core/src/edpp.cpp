#include "pdp/edpp.hpp"

#include <algorithm>

namespace pdp {

namespace {

// Mutable rebuild state: rotations as edge-id lists (ids are unique, so the
// representation stays unambiguous through the surgery).
struct Builder {
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rot;
  std::vector<int> edge_origin;

  int add_vertex() {
    rot.emplace_back();
    return static_cast<int>(rot.size()) - 1;
  }

  int add_edge(int u, int v, long long w, int origin) {
    edges.push_back({u, v, w});
    edge_origin.push_back(origin);
    return static_cast<int>(edges.size()) - 1;
  }

  int vertex_count() const { return static_cast<int>(rot.size()); }
};

}  // namespace

GadgetMap reduce_edpp(const Instance& instance) {
  if (instance.tag != CaseTag::kOneFace) {
    fail(ErrorCode::BadCaseTag, "the gadget reduction handles one-face only");
  }
  const PlanarGraph& g = instance.graph;
  FaceSet faces = trace_faces(g);
  OneFaceLabeling labels = face_labels(instance, faces);
  if (!is_noncrossing(labels.input_pairing())) {
    fail(ErrorCode::CrossingDemands,
         "demand chords are not planarly embeddable in the face");
  }

  Builder b;
  for (int v = 0; v < g.vertex_count(); ++v) b.add_vertex();
  for (int e = 0; e < g.edge_count(); ++e) {
    b.add_edge(g.edge(e).u, g.edge(e).v, g.edge(e).weight, e);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (Dart d : g.rotation(v)) b.rot[v].push_back(dart_edge(d));
  }

  // Stage 1: relocate every terminal onto a degree-1 stub inside the
  // designated face. The stub is spliced into the rotation at the face
  // corner, so the new leaf lies on the same face.
  const Face& face = faces.faces[labels.face];
  std::vector<char> is_terminal(g.vertex_count(), 0);
  for (const auto& [s, t] : instance.terminals) is_terminal[s] = is_terminal[t] = 1;

  std::vector<int> stub_of(g.vertex_count(), -1);
  const int blen = face.boundary_length();
  for (int i = 0; i < blen; ++i) {
    Dart arrive = face.darts[i];
    Dart depart = face.darts[(i + 1) % blen];
    int v = g.head(arrive);
    if (!is_terminal[v] || stub_of[v] != -1) continue;
    int stub = b.add_vertex();
    int stub_edge = b.add_edge(v, stub, 0, -1);
    // Insert between the arriving and departing edges of the face corner.
    auto& rv = b.rot[v];
    auto pos = std::find(rv.begin(), rv.end(), dart_edge(depart));
    // depart leaves v; arrive's edge sits just before it in clockwise order
    rv.insert(pos, stub_edge);
    b.rot[stub].push_back(stub_edge);
    stub_of[v] = stub;
  }

  // Stage 2: cycle expansion of every vertex that could still host two
  // routes sharing it (an endpoint path costs two slots at its relocated
  // terminal: the stub and one original edge, so degree 3 is always safe).
  const int original_vertices = g.vertex_count();
  for (int v = 0; v < original_vertices; ++v) {
    int deg = static_cast<int>(b.rot[v].size());
    if (deg < 4) continue;

    std::vector<int> ports(deg);
    std::vector<int> incident = b.rot[v];
    for (int j = 0; j < deg; ++j) ports[j] = b.add_vertex();
    for (int j = 0; j < deg; ++j) {
      int e = incident[j];
      if (b.edges[e].u == v) {
        b.edges[e].u = ports[j];
      } else {
        b.edges[e].v = ports[j];
      }
    }
    std::vector<int> ring(deg);
    for (int j = 0; j < deg; ++j) {
      ring[j] = b.add_edge(ports[j], ports[(j + 1) % deg], 0, -1);
    }
    for (int j = 0; j < deg; ++j) {
      // Clockwise around the port: outward edge, next ring edge, previous.
      b.rot[ports[j]] = {incident[j], ring[j], ring[(j + deg - 1) % deg]};
    }
    b.rot[v].clear();  // v remains as an isolated husk
  }

  GadgetMap gm;
  gm.original = instance;
  gm.edge_origin = b.edge_origin;
  Instance reduced;
  reduced.graph = PlanarGraph(b.vertex_count(), b.edges, b.rot);
  reduced.tag = CaseTag::kOneFace;
  reduced.face_anchors = instance.face_anchors;
  reduced.edge_disjoint = false;
  for (const auto& [s, t] : instance.terminals) {
    reduced.terminals.emplace_back(stub_of[s], stub_of[t]);
    gm.terminal_relocation.emplace_back(s, stub_of[s]);
    gm.terminal_relocation.emplace_back(t, stub_of[t]);
  }
  gm.reduced = validate_instance(std::move(reduced));
  return gm;
}

Solution lift_solution(const GadgetMap& gm, const Solution& sol) {
  Solution lifted;
  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    const Path& p = sol.paths[i];
    Path out;
    int start = gm.terminal_relocation[2 * i].first;
    int goal = gm.terminal_relocation[2 * i + 1].first;
    out.vertices.push_back(start);
    int cur = start;
    for (int reduced_edge : p.edges) {
      int origin = gm.edge_origin[reduced_edge];
      if (origin < 0) continue;  // gadget-internal edge
      const Edge& ed = gm.original.graph.edge(origin);
      if (ed.u == cur) {
        cur = ed.v;
      } else if (ed.v == cur) {
        cur = ed.u;
      } else {
        fail(ErrorCode::InternalInconsistency,
             "lifted edge sequence is not a walk");
      }
      out.edges.push_back(origin);
      out.vertices.push_back(cur);
    }
    if (cur != goal) {
      fail(ErrorCode::InternalInconsistency, "lifted path misses its sink");
    }
    lifted.paths.push_back(std::move(out));
  }
  lifted.total_length = sol.total_length;
  return lifted;
}

bool validate_edge_disjoint(const Instance& instance, const Solution& sol) {
  const PlanarGraph& g = instance.graph;
  if (sol.paths.size() != instance.terminals.size()) return false;
  std::vector<char> used_edge(g.edge_count(), 0);
  long long total = 0;
  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    const Path& p = sol.paths[i];
    if (p.vertices.size() != p.edges.size() + 1 || p.edges.empty()) return false;
    if (p.vertices.front() != instance.terminals[i].first) return false;
    if (p.vertices.back() != instance.terminals[i].second) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : p.vertices) {
      if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
      seen[v] = 1;
    }
    for (std::size_t j = 0; j < p.edges.size(); ++j) {
      int e = p.edges[j];
      if (e < 0 || e >= g.edge_count() || used_edge[e]) return false;
      used_edge[e] = 1;
      int a = p.vertices[j], b2 = p.vertices[j + 1];
      const Edge& ed = g.edge(e);
      if (!((ed.u == a && ed.v == b2) || (ed.u == b2 && ed.v == a))) return false;
    }
    total += p.weight(g);
  }
  return total == sol.total_length;
}

}  // namespace pdp
