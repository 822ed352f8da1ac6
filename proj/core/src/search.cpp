#include "pdp/search.hpp"

#include <algorithm>
#include <random>

namespace pdp {

namespace {

// Deterministic greedy order: ascending (min endpoint, max endpoint, index).
std::vector<int> greedy_edge_order(const PlanarGraph& g) {
  std::vector<int> order(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    auto ka = std::tuple(std::min(ea.u, ea.v), std::max(ea.u, ea.v), a);
    auto kb = std::tuple(std::min(eb.u, eb.v), std::max(eb.u, eb.v), b);
    return ka < kb;
  });
  return order;
}

// Decomposes a surviving edge set into the k demand paths; anything but a
// clean path system is an inconsistency (or, for isolation, a detected
// failure).
std::optional<Solution> assemble_paths(const Instance& instance,
                                       const std::vector<char>& in_solution) {
  const PlanarGraph& g = instance.graph;
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  int live_edges = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!in_solution[e]) continue;
    adj[g.edge(e).u].push_back({g.edge(e).v, e});
    adj[g.edge(e).v].push_back({g.edge(e).u, e});
    ++live_edges;
  }

  Solution sol;
  std::vector<char> used_edge(g.edge_count(), 0);
  std::vector<char> used_vertex(g.vertex_count(), 0);
  for (const auto& [s, t] : instance.terminals) {
    Path path;
    path.vertices.push_back(s);
    int cur = s;
    while (cur != t) {
      if (used_vertex[cur]) return std::nullopt;
      used_vertex[cur] = 1;
      int next = -1, via = -1;
      for (const auto& [to, e] : adj[cur]) {
        if (used_edge[e]) continue;
        if (next != -1) return std::nullopt;  // branching
        next = to;
        via = e;
      }
      if (next == -1) return std::nullopt;  // dead end
      used_edge[via] = 1;
      path.edges.push_back(via);
      path.vertices.push_back(next);
      cur = next;
      if (static_cast<int>(path.edges.size()) > g.vertex_count()) {
        return std::nullopt;
      }
    }
    if (used_vertex[t]) return std::nullopt;
    used_vertex[t] = 1;
    sol.paths.push_back(std::move(path));
  }
  int used_total = 0;
  for (char u : used_edge) used_total += u;
  if (used_total != live_edges) return std::nullopt;  // leftover edges
  for (const Path& p : sol.paths) sol.total_length += p.weight(g);
  return sol;
}

}  // namespace

CountResult count_instance(const Instance& instance,
                           const CountOverrides& overrides,
                           const DetOptions& opt) {
  if (instance.tag == CaseTag::kOneFace) {
    return count_one_face(instance, overrides, opt);
  }
  return count_two_face(instance, overrides, opt);
}

bool validate_solution(const Instance& instance, const Solution& sol) {
  const PlanarGraph& g = instance.graph;
  if (sol.paths.size() != instance.terminals.size()) return false;
  std::vector<char> used_vertex(g.vertex_count(), 0);
  long long total = 0;
  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    const Path& p = sol.paths[i];
    if (p.vertices.size() != p.edges.size() + 1 || p.edges.empty()) return false;
    if (p.vertices.front() != instance.terminals[i].first) return false;
    if (p.vertices.back() != instance.terminals[i].second) return false;
    for (std::size_t j = 0; j < p.edges.size(); ++j) {
      int e = p.edges[j];
      if (e < 0 || e >= g.edge_count()) return false;
      int a = p.vertices[j], b = p.vertices[j + 1];
      const Edge& ed = g.edge(e);
      if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
    }
    for (int v : p.vertices) {
      if (v < 0 || v >= g.vertex_count() || used_vertex[v]) return false;
      used_vertex[v] = 1;
    }
    total += p.weight(g);
  }
  return total == sol.total_length;
}

Solution greedy_search(const Instance& instance, const DetOptions& opt) {
  CountResult base = count_instance(instance, {}, opt);
  if (!base.exists()) {
    fail(ErrorCode::NoSolution, "instance admits no disjoint path system");
  }
  const long long target = base.min_length;

  std::vector<char> disabled(instance.graph.edge_count(), 0);
  CountOverrides overrides;
  overrides.disabled_edges = &disabled;
  for (int e : greedy_edge_order(instance.graph)) {
    disabled[e] = 1;
    CountResult r = count_instance(instance, overrides, opt);
    if (!(r.exists() && r.min_length == target)) disabled[e] = 0;
  }

  std::vector<char> in_solution(instance.graph.edge_count(), 0);
  for (int e = 0; e < instance.graph.edge_count(); ++e) {
    in_solution[e] = disabled[e] ? 0 : 1;
  }
  auto sol = assemble_paths(instance, in_solution);
  if (!sol || sol->total_length != target || !validate_solution(instance, *sol)) {
    fail(ErrorCode::InternalInconsistency,
         "greedy survivors do not form a shortest disjoint path system");
  }
  return *sol;
}

RandomWeights draw_random_weights(const Instance& instance,
                                  unsigned long long seed) {
  const int m = instance.graph.edge_count();
  const int n = instance.graph.vertex_count();
  RandomWeights rw;
  rw.seed = seed;
  // A solution has fewer than n+1 edges, each r_e <= 2m, so this base keeps
  // the true-length ordering intact.
  rw.base = 2LL * m * (n + 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(1, 2LL * m);
  rw.weights.resize(m);
  for (int e = 0; e < m; ++e) {
    rw.weights[e] = rw.base * instance.graph.edge(e).weight + dist(rng);
  }
  return rw;
}

IsolationOutcome isolation_search(const Instance& instance,
                                  unsigned long long seed,
                                  const DetOptions& opt) {
  CountResult base = count_instance(instance, {}, opt);
  if (!base.exists()) {
    fail(ErrorCode::NoSolution, "instance admits no disjoint path system");
  }

  IsolationOutcome outcome;
  outcome.seed = seed;
  RandomWeights rw = draw_random_weights(instance, seed);

  CountOverrides overrides;
  overrides.weights = &rw.weights;
  CountResult weighted = count_instance(instance, overrides, opt);
  if (!weighted.exists() || weighted.count != 1) {
    return outcome;  // not isolating (or a cancellation pretending it is)
  }
  outcome.isolated = true;
  const long long isolated_degree = weighted.min_length;

  // e belongs to the isolated optimum iff deleting e raises the min degree.
  std::vector<char> disabled(instance.graph.edge_count(), 0);
  CountOverrides probe;
  probe.weights = &rw.weights;
  probe.disabled_edges = &disabled;
  std::vector<char> in_solution(instance.graph.edge_count(), 0);
  for (int e = 0; e < instance.graph.edge_count(); ++e) {
    disabled[e] = 1;
    CountResult r = count_instance(instance, probe, opt);
    in_solution[e] = (!r.exists() || r.min_length > isolated_degree) ? 1 : 0;
    disabled[e] = 0;
  }

  auto sol = assemble_paths(instance, in_solution);
  if (!sol || sol->total_length != base.min_length ||
      !validate_solution(instance, *sol)) {
    return outcome;  // detected failure
  }
  outcome.solution = std::move(*sol);
  return outcome;
}

}  // namespace pdp
