#include "pdp/oracle.hpp"

#include <algorithm>
#include <random>

namespace pdp {

namespace {

constexpr long long kTupleCap = 2'000'000;

struct PathSearch {
  const PlanarGraph& g;
  const Instance& instance;
  bool edge_disjoint;
  bool collect;
  Enumeration result;
  std::vector<char> vertex_used;
  std::vector<char> edge_used;
  std::vector<char> reserved_terminal;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge)
  std::vector<Path> current;
  long long tuples_seen = 0;

  explicit PathSearch(const Instance& inst, bool edges_only, bool collect_t)
      : g(inst.graph),
        instance(inst),
        edge_disjoint(edges_only),
        collect(collect_t) {
    vertex_used.assign(g.vertex_count(), 0);
    edge_used.assign(g.edge_count(), 0);
    reserved_terminal.assign(g.vertex_count(), 0);
    adj.resize(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      adj[g.edge(e).u].push_back({g.edge(e).v, e});
      adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    if (!edge_disjoint) {
      for (const auto& [s, t] : inst.terminals) {
        reserved_terminal[s] = reserved_terminal[t] = 1;
      }
    }
  }

  void record() {
    if (++tuples_seen > kTupleCap) {
      fail(ErrorCode::InstanceTooLarge, "oracle tuple cap exceeded");
    }
    long long total = 0;
    for (const Path& p : current) total += p.weight(g);
    result.total += 1;
    if (result.min_length < 0 || total < result.min_length) {
      result.min_length = total;
      result.count_at_min = 1;
    } else if (total == result.min_length) {
      result.count_at_min += 1;
    }
    if (collect) {
      Solution sol;
      sol.paths = current;
      sol.total_length = total;
      result.tuples.push_back(std::move(sol));
    }
  }

  void extend(std::size_t demand, int cur, std::vector<char>& path_vertices) {
    const int target = instance.terminals[demand].second;
    if (cur == target) {
      if (demand + 1 == instance.terminals.size()) {
        record();
      } else {
        start_demand(demand + 1);
      }
      return;
    }
    for (const auto& [to, e] : adj[cur]) {
      if (edge_used[e]) continue;
      if (edge_disjoint) {
        if (path_vertices[to]) continue;  // per-path simplicity
      } else {
        if (vertex_used[to]) continue;
        if (reserved_terminal[to] && to != target) continue;
      }
      edge_used[e] = 1;
      path_vertices[to] = 1;
      if (!edge_disjoint) vertex_used[to] = 1;
      current.back().edges.push_back(e);
      current.back().vertices.push_back(to);
      extend(demand, to, path_vertices);
      current.back().edges.pop_back();
      current.back().vertices.pop_back();
      if (!edge_disjoint) vertex_used[to] = 0;
      path_vertices[to] = 0;
      edge_used[e] = 0;
    }
  }

  void start_demand(std::size_t demand) {
    const int s = instance.terminals[demand].first;
    current.push_back({{s}, {}});
    std::vector<char> path_vertices(g.vertex_count(), 0);
    path_vertices[s] = 1;
    if (!edge_disjoint) vertex_used[s] = 1;
    extend(demand, s, path_vertices);
    if (!edge_disjoint) vertex_used[s] = 0;
    current.pop_back();
  }
};

}  // namespace

Enumeration enum_disjoint_paths(const Instance& instance, bool collect_tuples,
                                int vertex_bound) {
  if (instance.graph.vertex_count() > vertex_bound) {
    fail(ErrorCode::InstanceTooLarge,
         "oracle bound is " + std::to_string(vertex_bound) + " vertices");
  }
  PathSearch search(instance, /*edges_only=*/false, collect_tuples);
  search.start_demand(0);
  return std::move(search.result);
}

Enumeration enum_edge_disjoint_paths(const Instance& instance,
                                     bool collect_tuples, int vertex_bound) {
  if (instance.graph.vertex_count() > vertex_bound) {
    fail(ErrorCode::InstanceTooLarge,
         "oracle bound is " + std::to_string(vertex_bound) + " vertices");
  }
  PathSearch search(instance, /*edges_only=*/true, collect_tuples);
  search.start_demand(0);
  return std::move(search.result);
}

namespace {

struct CoverSearch {
  const ModifiedGraph& mg;
  const CoverVisitor& visit;
  const std::vector<int>* dart_shift;
  int n_prime;
  std::vector<std::vector<int>> arcs_from;  // arc indices by tail
  std::vector<int> chosen_arc;              // per vertex
  std::vector<char> head_taken;

  CoverSearch(const ModifiedGraph& m, const CoverVisitor& v,
              const std::vector<int>* shift)
      : mg(m), visit(v), dart_shift(shift), n_prime(m.vertex_count()) {
    arcs_from.resize(n_prime);
    for (std::size_t i = 0; i < mg.arcs().size(); ++i) {
      arcs_from[mg.arcs()[i].from].push_back(static_cast<int>(i));
    }
    chosen_arc.assign(n_prime, -1);
    head_taken.assign(n_prime, 0);
  }

  void emit() {
    Cover cover;
    cover.successor.resize(n_prime);
    cover.arc_xdeg.resize(n_prime);
    for (int v = 0; v < n_prime; ++v) {
      const Arc& a = mg.arcs()[chosen_arc[v]];
      cover.successor[v] = a.to;
      cover.arc_xdeg[v] = a.xdeg;
      cover.degree += a.xdeg;
      if (dart_shift && a.dart >= 0) cover.net_axis_cross += (*dart_shift)[a.dart];
    }
    std::vector<char> seen(n_prime, 0);
    for (int v = 0; v < n_prime; ++v) {
      if (seen[v]) continue;
      int length = 0;
      bool special = false;
      int w = v;
      do {
        seen[w] = 1;
        special = special || mg.is_special(w);
        w = cover.successor[w];
        ++length;
      } while (w != v);
      ++cover.cycle_count;
      if (!special && length >= 2) cover.extra_nontrivial_cycle = true;
    }
    // Paths of the cover: from each demand's high end to the low end of the
    // next demand along its cycle.
    const auto& v_of_label = mg.vertex_of_label();
    std::vector<int> label_of(n_prime, 0);
    for (int label = 1; label <= 2 * mg.k(); ++label) {
      label_of[v_of_label[label]] = label;
    }
    for (const auto& [lo, hi] : mg.pairing().pairs()) {
      int cur = cover.successor[v_of_label[hi]];
      while (label_of[cur] == 0) cur = cover.successor[cur];
      cover.realized_label_pairs.emplace_back(hi, label_of[cur]);
    }
    visit(cover);
  }

  void assign(int v) {
    if (v == n_prime) {
      emit();
      return;
    }
    for (int idx : arcs_from[v]) {
      const Arc& a = mg.arcs()[idx];
      if (head_taken[a.to]) continue;
      head_taken[a.to] = 1;
      chosen_arc[v] = idx;
      assign(v + 1);
      chosen_arc[v] = -1;
      head_taken[a.to] = 0;
    }
  }
};

}  // namespace

void enum_cycle_covers(const ModifiedGraph& mg, const CoverVisitor& visit,
                       const std::vector<int>* dart_shift, int vertex_bound) {
  if (mg.vertex_count() > vertex_bound) {
    fail(ErrorCode::InstanceTooLarge,
         "cover oracle bound is " + std::to_string(vertex_bound) + " vertices");
  }
  CoverSearch search(mg, visit, dart_shift);
  search.assign(0);
}

CoverTally tally_covers(const ModifiedGraph& mg, int y_modulus,
                        const std::vector<int>* dart_shift, int vertex_bound) {
  CoverTally tally;
  enum_cycle_covers(
      mg,
      [&](const Cover& cover) {
        BigInt contrib(cover.sign(mg.vertex_count()));
        tally.by_degree[cover.degree] += contrib;
        if (y_modulus > 0) {
          int cls = ((cover.net_axis_cross % y_modulus) + y_modulus) % y_modulus;
          tally.by_degree_and_class[{cover.degree, cls}] += contrib;
        }
      },
      dart_shift, vertex_bound);
  return tally;
}

Poly tally_polynomial(const std::map<long long, BigInt>& by_degree) {
  Poly p;
  for (const auto& [degree, value] : by_degree) {
    p += Poly::monomial(value, static_cast<int>(degree));
  }
  return p;
}

// --- Instance generation -------------------------------------------------

namespace {

std::vector<long long> draw_weights(std::mt19937_64& rng, int count,
                                    int max_weight) {
  std::vector<long long> w(count, 1);
  if (max_weight > 1) {
    std::uniform_int_distribution<long long> dist(1, max_weight);
    for (auto& x : w) x = dist(rng);
  }
  return w;
}

// The face whose boundary covers every listed vertex (the designated face of
// the generated family).
int locate_face(const PlanarGraph& g, const FaceSet& faces,
                const std::vector<int>& cover_vertices) {
  for (const Face& f : faces.faces) {
    std::vector<char> on_face(g.vertex_count(), 0);
    for (Dart d : f.darts) on_face[g.tail(d)] = 1;
    bool all = true;
    for (int v : cover_vertices) all = all && on_face[v];
    if (all) return f.id;
  }
  fail(ErrorCode::BadParams, "no face covers the requested boundary");
}

Dart anchor_at(const PlanarGraph& g, const Face& face, int tail_vertex) {
  for (Dart d : face.darts) {
    if (g.tail(d) == tail_vertex) return d;
  }
  fail(ErrorCode::BadParams, "anchor vertex not on face");
}

// Picks 2k distinct slots among `positions` boundary vertices and assigns
// source/sink roles per the requested order.
std::vector<std::pair<int, int>> place_terminals(
    std::mt19937_64& rng, const std::vector<int>& boundary, int k,
    TerminalOrder order) {
  const int b = static_cast<int>(boundary.size());
  if (2 * k > b) fail(ErrorCode::BadParams, "more terminals than boundary slots");
  std::vector<int> slots(b);
  for (int i = 0; i < b; ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  slots.resize(2 * k);
  std::sort(slots.begin(), slots.end());

  std::vector<std::pair<int, int>> terminals(k);
  switch (order) {
    case TerminalOrder::kParallel:
      // s_1 .. s_k, t_k .. t_1 around the face
      for (int i = 0; i < k; ++i) {
        terminals[i] = {boundary[slots[i]], boundary[slots[2 * k - 1 - i]]};
      }
      break;
    case TerminalOrder::kSerial:
      for (int i = 0; i < k; ++i) {
        terminals[i] = {boundary[slots[2 * i]], boundary[slots[2 * i + 1]]};
      }
      break;
    case TerminalOrder::kGeneral: {
      std::vector<int> perm(2 * k);
      for (int i = 0; i < 2 * k; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int i = 0; i < k; ++i) {
        terminals[i] = {boundary[slots[perm[2 * i]]],
                        boundary[slots[perm[2 * i + 1]]]};
      }
      break;
    }
  }
  return terminals;
}

Instance gen_grid(const GenSpec& spec) {
  const int rows = spec.rows, cols = spec.cols;
  if (rows < 2 || cols < 2) fail(ErrorCode::BadParams, "grid needs rows,cols >= 2");
  std::mt19937_64 rng(spec.seed);
  auto id = [&](int r, int c) { return r * cols + c; };

  std::vector<Edge> edges;
  // horizontal then vertical, row-major
  std::vector<std::vector<std::vector<int>>> dir_edge(
      rows, std::vector<std::vector<int>>(cols, std::vector<int>(4, -1)));
  // directions: 0=east,1=south,2=west,3=north
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      int e = static_cast<int>(edges.size());
      edges.push_back({id(r, c), id(r, c + 1), 1});
      dir_edge[r][c][0] = e;
      dir_edge[r][c + 1][2] = e;
    }
  }
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int e = static_cast<int>(edges.size());
      edges.push_back({id(r, c), id(r + 1, c), 1});
      dir_edge[r][c][1] = e;
      dir_edge[r + 1][c][3] = e;
    }
  }
  auto weights = draw_weights(rng, static_cast<int>(edges.size()),
                              spec.max_weight);
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e].weight = weights[e];

  // Clockwise rotations with rows growing southward: east, south, west, north.
  std::vector<std::vector<int>> rotations(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      for (int dir : {0, 1, 2, 3}) {
        int e = dir_edge[r][c][dir];
        if (e >= 0) rotations[id(r, c)].push_back(e);
      }
    }
  }

  Instance inst;
  inst.graph = PlanarGraph(rows * cols, edges, rotations);
  inst.tag = CaseTag::kOneFace;
  inst.edge_disjoint = spec.edge_disjoint;

  // Outer face: the one whose boundary covers the whole grid rim.
  std::vector<int> rim;
  for (int c = 0; c < cols; ++c) rim.push_back(id(0, c));
  for (int r = 1; r < rows; ++r) rim.push_back(id(r, cols - 1));
  for (int c = cols - 2; c >= 0; --c) rim.push_back(id(rows - 1, c));
  for (int r = rows - 2; r >= 1; --r) rim.push_back(id(r, 0));

  FaceSet faces = trace_faces(inst.graph);
  const Face& outer = faces.faces[locate_face(inst.graph, faces, rim)];
  std::vector<int> walk;
  for (Dart d : outer.darts) walk.push_back(inst.graph.tail(d));

  // Placing terminals along the actual walk order (and anchoring the label
  // sweep at the first slot) makes the order tags literal: parallel placement
  // labels as the parallel pairing.
  inst.terminals = place_terminals(rng, walk, spec.k, spec.order);
  inst.face_anchors = {anchor_at(inst.graph, outer, inst.terminals[0].first)};
  return validate_instance(std::move(inst));
}

Instance gen_annulus(const GenSpec& spec) {
  const int rings = spec.rings, spokes = spec.spokes;
  if (rings < 2 || spokes < 3) {
    fail(ErrorCode::BadParams, "annulus needs rings >= 2, spokes >= 3");
  }
  if (spec.k > spokes) fail(ErrorCode::BadParams, "k exceeds spoke count");
  std::mt19937_64 rng(spec.seed);
  auto id = [&](int ring, int j) { return ring * spokes + j; };

  std::vector<Edge> edges;
  std::vector<std::vector<int>> ring_edge(rings, std::vector<int>(spokes));
  std::vector<std::vector<int>> spoke_edge(rings - 1, std::vector<int>(spokes));
  for (int r = 0; r < rings; ++r) {
    for (int j = 0; j < spokes; ++j) {
      ring_edge[r][j] = static_cast<int>(edges.size());
      edges.push_back({id(r, j), id(r, (j + 1) % spokes), 1});
    }
  }
  for (int r = 0; r + 1 < rings; ++r) {
    for (int j = 0; j < spokes; ++j) {
      spoke_edge[r][j] = static_cast<int>(edges.size());
      edges.push_back({id(r, j), id(r + 1, j), 1});
    }
  }
  auto weights = draw_weights(rng, static_cast<int>(edges.size()),
                              spec.max_weight);
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e].weight = weights[e];

  // Ring 0 is the inner circle (sinks' face), ring rings-1 the outer
  // (sources' face). Clockwise rotations, rings indexed outward:
  //   inner vertex:  [spoke out, ring prev, ring next]
  //   middle vertex: [spoke out, ring prev, spoke in, ring next]
  //   outer vertex:  [spoke in, ring next, ring prev]
  std::vector<std::vector<int>> rotations(rings * spokes);
  for (int r = 0; r < rings; ++r) {
    for (int j = 0; j < spokes; ++j) {
      auto& rot = rotations[id(r, j)];
      int prev = ring_edge[r][(j + spokes - 1) % spokes];
      int next = ring_edge[r][j];
      if (r == 0) {
        rot = {spoke_edge[0][j], prev, next};
      } else if (r == rings - 1) {
        rot = {spoke_edge[r - 1][j], next, prev};
      } else {
        rot = {spoke_edge[r][j], prev, spoke_edge[r - 1][j], next};
      }
    }
  }

  Instance inst;
  inst.graph = PlanarGraph(rings * spokes, edges, rotations);
  inst.tag = CaseTag::kTwoFaceParallel;
  inst.edge_disjoint = false;

  // Sources on the outer ring, sinks on the inner ring at the uniformly
  // shifted spokes. A mismatch swaps two sink assignments; any transposition
  // breaks offset consistency (impossible for k < 3, where offsets always
  // agree modulo k).
  if (spec.mismatch && spec.k < 3) {
    fail(ErrorCode::BadParams, "inconsistent offsets need k >= 3");
  }
  std::vector<int> positions(spokes);
  for (int j = 0; j < spokes; ++j) positions[j] = j;
  std::shuffle(positions.begin(), positions.end(), rng);
  positions.resize(spec.k);
  std::sort(positions.begin(), positions.end());
  std::vector<int> sink_spoke(spec.k);
  for (int i = 0; i < spec.k; ++i) {
    sink_spoke[i] = ((positions[i] + spec.shift) % spokes + spokes) % spokes;
  }
  if (spec.mismatch) std::swap(sink_spoke[0], sink_spoke[1]);
  for (int i = 0; i < spec.k; ++i) {
    inst.terminals.emplace_back(id(rings - 1, positions[i]), id(0, sink_spoke[i]));
  }

  // Sources' face (outer ring) first, then the sinks' face (inner ring).
  FaceSet faces = trace_faces(inst.graph);
  std::vector<int> inner_rim(spokes), outer_rim(spokes);
  for (int j = 0; j < spokes; ++j) {
    inner_rim[j] = id(0, j);
    outer_rim[j] = id(rings - 1, j);
  }
  auto rim_face = [&](const std::vector<int>& rim) -> const Face& {
    for (const Face& f : faces.faces) {
      if (f.boundary_length() != spokes) continue;
      std::vector<char> on(inst.graph.vertex_count(), 0);
      for (Dart d : f.darts) on[inst.graph.tail(d)] = 1;
      bool all = true;
      for (int v : rim) all = all && on[v];
      if (all) return f;
    }
    fail(ErrorCode::BadParams, "annulus rim face not found");
  };
  inst.face_anchors = {rim_face(outer_rim).darts.front(),
                       rim_face(inner_rim).darts.front()};
  return validate_instance(std::move(inst));
}

Instance gen_random_planar(const GenSpec& spec) {
  const int n = spec.n;
  if (n < 4) fail(ErrorCode::BadParams, "random-planar needs n >= 4");
  std::mt19937_64 rng(spec.seed);

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});

  // Random non-crossing chords inside the polygon.
  std::vector<std::pair<int, int>> chords;
  auto crosses = [&](int a, int b, int c, int d) {
    auto inside = [&](int x, int lo, int hi) {
      // strictly between lo and hi走 clockwise? use circular interval (lo,hi)
      if (lo < hi) return lo < x && x < hi;
      return x > lo || x < hi;
    };
    bool c_in = inside(c, a, b);
    bool d_in = inside(d, a, b);
    return c_in != d_in;
  };
  std::uniform_int_distribution<int> pick(0, n - 1);
  int attempts = spec.chords * 20 + 20;
  while (static_cast<int>(chords.size()) < spec.chords && attempts-- > 0) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if ((a + 1) % n == b || (b + 1) % n == a) continue;  // cycle edge
    int lo = std::min(a, b), hi = std::max(a, b);
    bool ok = true;
    for (auto [c, d] : chords) {
      if ((c == lo && d == hi)) ok = false;
      if (ok && crosses(lo, hi, c, d) && c != lo && c != hi && d != lo && d != hi) {
        ok = false;
      }
    }
    if (!ok) continue;
    chords.emplace_back(lo, hi);
    edges.push_back({lo, hi, 1});
  }
  auto weights = draw_weights(rng, static_cast<int>(edges.size()),
                              spec.max_weight);
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e].weight = weights[e];

  // Clockwise rotation at v: incident edges by decreasing circular distance
  // of the other endpoint (counter-clockwise distance from v).
  std::vector<std::vector<int>> rotations(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, int>> incident;  // (ccw distance, edge)
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int other = -1;
      if (edges[e].u == v) other = edges[e].v;
      if (edges[e].v == v) other = edges[e].u;
      if (other < 0) continue;
      int dist = ((other - v) % n + n) % n;
      incident.push_back({dist, static_cast<int>(e)});
    }
    std::sort(incident.begin(), incident.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [dist, e] : incident) rotations[v].push_back(e);
  }

  Instance inst;
  inst.graph = PlanarGraph(n, edges, rotations);
  inst.tag = CaseTag::kOneFace;
  inst.edge_disjoint = spec.edge_disjoint;

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  FaceSet faces = trace_faces(inst.graph);
  const Face& outer = faces.faces[locate_face(inst.graph, faces, all)];
  std::vector<int> walk;
  for (Dart d : outer.darts) walk.push_back(inst.graph.tail(d));

  inst.terminals = place_terminals(rng, walk, spec.k, spec.order);
  inst.face_anchors = {anchor_at(inst.graph, outer, inst.terminals[0].first)};
  return validate_instance(std::move(inst));
}

}  // namespace

Instance gen_instance(const GenSpec& spec) {
  if (spec.k < 1) fail(ErrorCode::BadParams, "k must be positive");
  if (spec.max_weight < 1 || spec.max_weight > kMaxEdgeWeight) {
    fail(ErrorCode::BadParams, "max_weight out of range");
  }
  if (spec.family == "grid") return gen_grid(spec);
  if (spec.family == "annulus") return gen_annulus(spec);
  if (spec.family == "random-planar") return gen_random_planar(spec);
  fail(ErrorCode::BadParams, "unknown family " + spec.family);
}

}  // namespace pdp
