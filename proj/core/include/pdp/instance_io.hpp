#pragma once

#include <string>

#include "pdp/graph.hpp"

namespace pdp {

// JSON instance format:
//   {
//     "n": 4,
//     "edges": [[0,1], [1,2,3], ...],            // [u, v] or [u, v, weight]
//     "rotations": {"0": [0,3], "1": [1,0], ...}, // clockwise edge ids
//     "terminals": [[s1,t1], ...],
//     "case": "one-face" | "two-face-parallel",
//     "faces": [[edge,dir], ...],                // anchor darts (1 or 2)
//     "mode": "edge-disjoint"                    // optional
//   }
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// FNV-1a over the canonical serialization; stable across runs.
std::string instance_digest(const Instance& instance);

// Graphviz dump (terminals highlighted), for documentation.
std::string instance_to_dot(const Instance& instance);

}  // namespace pdp
