#include "pdp/two_face.hpp"

#include <algorithm>
#include <queue>

namespace pdp {

std::vector<int> Axis::dart_shift(int dart_count) const {
  std::vector<int> shift(dart_count, 0);
  for (const AxisStep& step : steps) {
    shift[step.positive_dart] = 1;
    shift[reversed(step.positive_dart)] = -1;
  }
  return shift;
}

Axis find_axis(const Instance& instance, const FaceSet& faces) {
  const PlanarGraph& g = instance.graph;
  if (instance.face_anchors.size() != 2) {
    fail(ErrorCode::BadCaseTag, "two-face instance needs two face anchors");
  }
  const int f_src = faces.face_of(instance.face_anchors[0]);
  const int f_snk = faces.face_of(instance.face_anchors[1]);

  std::vector<bool> terminal_incident(g.edge_count(), false);
  {
    std::vector<bool> is_terminal(g.vertex_count(), false);
    for (const auto& [s, t] : instance.terminals) {
      is_terminal[s] = is_terminal[t] = true;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      terminal_incident[e] =
          is_terminal[g.edge(e).u] || is_terminal[g.edge(e).v];
    }
  }

  // Dijkstra over faces with cost (terminal-incident crossings, length),
  // lexicographic edge sequence as the final tie-break. Desk-scale graphs,
  // so carrying the sequences is fine.
  struct State {
    long long bad;
    long long length;
    std::vector<int> seq;
    int face;
    bool operator>(const State& o) const {
      if (bad != o.bad) return bad > o.bad;
      if (length != o.length) return length > o.length;
      if (seq != o.seq) return seq > o.seq;
      return face > o.face;
    }
  };
  std::priority_queue<State, std::vector<State>, std::greater<State>> queue;
  std::vector<bool> settled(faces.faces.size(), false);
  queue.push({0, 0, {}, f_src});
  std::vector<int> best_seq;
  bool found = false;
  while (!queue.empty()) {
    State cur = queue.top();
    queue.pop();
    if (settled[cur.face]) continue;
    settled[cur.face] = true;
    if (cur.face == f_snk) {
      best_seq = cur.seq;
      found = true;
      break;
    }
    for (Dart d : faces.faces[cur.face].darts) {
      int e = dart_edge(d);
      int other = faces.face_of(reversed(d));
      if (other == cur.face || settled[other]) continue;
      State next = cur;
      next.bad += terminal_incident[e] ? 1 : 0;
      next.length += 1;
      next.seq.push_back(e);
      next.face = other;
      queue.push(std::move(next));
    }
  }
  if (!found) {
    fail(ErrorCode::NoDualPath,
         "no dual path between the designated faces (disconnected input?)");
  }

  Axis axis;
  int cur = f_src;
  axis.face_path.push_back(cur);
  for (int e : best_seq) {
    // The step leaves `cur`; the positive dart is the one whose face is the
    // side we arrive on (the axis crosses it right-to-left).
    Dart d0 = make_dart(e, 0);
    Dart on_cur = faces.face_of(d0) == cur ? d0 : reversed(d0);
    Dart positive = reversed(on_cur);
    axis.steps.push_back({e, positive});
    cur = faces.face_of(positive);
    axis.face_path.push_back(cur);
  }
  axis.source_face_dart = reversed(axis.steps.front().positive_dart);
  axis.sink_face_dart = axis.steps.back().positive_dart;
  return axis;
}

TwoFaceLabeling two_face_labels(const Instance& instance, const FaceSet& faces,
                                const Axis& axis) {
  const PlanarGraph& g = instance.graph;
  const int k = instance.k();
  TwoFaceLabeling lab;
  lab.label_of_vertex.assign(g.vertex_count(), 0);
  lab.vertex_of_label.assign(2 * k + 1, -1);
  lab.source_position.assign(k, -1);
  lab.sink_position.assign(k, -1);

  std::vector<int> source_index(g.vertex_count(), -1);
  std::vector<int> sink_index(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) {
    source_index[instance.terminals[i].first] = i;
    sink_index[instance.terminals[i].second] = i;
  }

  // Sinks: walk order starting at the head of the crossing dart.
  {
    const Face& face = faces.faces[faces.face_of(axis.sink_face_dart)];
    const int blen = face.boundary_length();
    const int start = static_cast<int>(
        std::find(face.darts.begin(), face.darts.end(), axis.sink_face_dart) -
        face.darts.begin());
    int rank = 0;
    for (int i = 1; i <= blen; ++i) {
      int v = g.tail(face.darts[(start + i) % blen]);
      if (sink_index[v] < 0) continue;
      if (lab.label_of_vertex[v] != 0) {
        fail(ErrorCode::TerminalRepeatsOnBoundary,
             "sink occurs twice on its face");
      }
      lab.sink_position[sink_index[v]] = rank;
      lab.label_of_vertex[v] = 1 + rank;
      lab.vertex_of_label[1 + rank] = v;
      ++rank;
    }
    if (rank != k) fail(ErrorCode::TerminalNotOnFace, "sink missing from face");
  }

  // Sources: reverse walk order starting at the tail of the crossing dart
  // (same rotational direction around the annulus as the sink sweep).
  {
    const Face& face = faces.faces[faces.face_of(axis.source_face_dart)];
    const int blen = face.boundary_length();
    const int start = static_cast<int>(
        std::find(face.darts.begin(), face.darts.end(), axis.source_face_dart) -
        face.darts.begin());
    int rank = 0;
    for (int i = 0; i < blen; ++i) {
      int v = g.tail(face.darts[((start - i) % blen + blen) % blen]);
      if (source_index[v] < 0) continue;
      if (lab.label_of_vertex[v] != 0) {
        fail(ErrorCode::TerminalRepeatsOnBoundary,
             "source occurs twice on its face");
      }
      lab.source_position[source_index[v]] = rank;
      lab.label_of_vertex[v] = k + 1 + rank;
      lab.vertex_of_label[k + 1 + rank] = v;
      ++rank;
    }
    if (rank != k) {
      fail(ErrorCode::TerminalNotOnFace, "source missing from face");
    }
  }

  for (int i = 0; i < k; ++i) {
    lab.label_pairs.emplace_back(
        lab.label_of_vertex[instance.terminals[i].second],
        lab.label_of_vertex[instance.terminals[i].first]);
  }
  return lab;
}

OffsetSpec offset(const TwoFaceLabeling& labeling) {
  OffsetSpec spec;
  spec.k = static_cast<int>(labeling.label_pairs.size());
  bool consistent = true;
  for (int i = 0; i < spec.k; ++i) {
    int off = ((labeling.sink_position[i] - labeling.source_position[i]) %
                   spec.k +
               spec.k) %
              spec.k;
    spec.demand_offsets.push_back(off);
    if (off != spec.demand_offsets.front()) consistent = false;
  }
  if (consistent && spec.k > 0) spec.common = spec.demand_offsets.front();
  return spec;
}

int axis_cross(const PlanarGraph& graph, const Axis& axis,
               const std::vector<Path>& paths) {
  std::vector<int> shift = axis.dart_shift(graph.edge_count() * 2);
  int total = 0;
  for (const Path& path : paths) {
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
      int e = path.edges[i];
      int from = path.vertices[i];
      Dart d = make_dart(e, graph.edge(e).u == from ? 0 : 1);
      total += shift[d];
    }
  }
  return total;
}

bool has_three_pairwise_interlacing(const Pairing& m) {
  // Cross demands (sink label low, source label high) interlace on the
  // annulus iff the sink order reverses the source order.
  const auto& ps = m.pairs();
  auto interlace = [&](std::size_t i, std::size_t j) {
    return (ps[i].first < ps[j].first) != (ps[i].second < ps[j].second);
  };
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      if (!interlace(a, b)) continue;
      for (std::size_t c = b + 1; c < ps.size(); ++c) {
        if (interlace(a, c) && interlace(b, c)) return true;
      }
    }
  }
  return false;
}

CountResult count_two_face(const Instance& instance,
                           const CountOverrides& overrides,
                           const DetOptions& opt,
                           TwoFaceDiagnostics* diagnostics) {
  FaceSet faces = trace_faces(instance.graph);
  Axis axis = find_axis(instance, faces);
  TwoFaceLabeling labels = two_face_labels(instance, faces, axis);
  OffsetSpec offsets = offset(labels);
  if (diagnostics) *diagnostics = {axis, labels, offsets};

  if (!offsets.consistent()) {
    return CountResult{};  // paths of a linkage share winding: no pure cover
  }

  const int k = instance.k();
  ModifiedGraph mg(instance.graph, labels.vertex_of_label,
                   labels.input_pairing(), overrides);
  std::vector<int> shift = axis.dart_shift(instance.graph.edge_count() * 2);
  CyclicPoly det = det_cyclic_poly(mg.cyclic_matrix(k, shift), opt);
  return extract_count(det.coeff(*offsets.common), mg);
}

bool decide_two_face(const Instance& instance, long long budget,
                     const DetOptions& opt) {
  CountResult r = count_two_face(instance, {}, opt);
  return r.exists() && r.min_length <= budget;
}

}  // namespace pdp
