#pragma once

#include <random>
#include <vector>

#include "pdp/graph.hpp"
#include "pdp/oracle.hpp"

namespace pdp::testing {

// 4-cycle 0-1-2-3 with the inner face anchored at dart 0->1. Terminal roles
// supplied by the caller.
inline Instance square_instance(std::vector<std::pair<int, int>> terminals) {
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  std::vector<std::vector<int>> rot = {{0, 3}, {1, 0}, {2, 1}, {3, 2}};
  Instance inst;
  inst.graph = PlanarGraph(4, edges, rot);
  inst.terminals = std::move(terminals);
  inst.tag = CaseTag::kOneFace;
  inst.face_anchors = {make_dart(0, 0)};
  return inst;
}

// Path s - a - t with its single face; k = 1.
inline Instance path3_instance() {
  std::vector<Edge> edges = {{0, 1}, {1, 2}};
  std::vector<std::vector<int>> rot = {{0}, {0, 1}, {1}};
  Instance inst;
  inst.graph = PlanarGraph(3, edges, rot);
  inst.terminals = {{0, 2}};
  inst.tag = CaseTag::kOneFace;
  inst.face_anchors = {make_dart(0, 0)};
  return inst;
}

inline GenSpec ladder_spec(unsigned long long seed, int spokes, int k,
                           int shift = 0, int rings = 2) {
  GenSpec spec;
  spec.family = "annulus";
  spec.seed = seed;
  spec.rings = rings;
  spec.spokes = spokes;
  spec.k = k;
  spec.shift = shift;
  return spec;
}

inline BigInt random_bigint(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return BigInt(dist(rng));
}

}  // namespace pdp::testing
