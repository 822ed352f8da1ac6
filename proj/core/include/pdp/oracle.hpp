#pragma once

#include <functional>
#include <map>

#include "pdp/modify.hpp"
#include "pdp/search.hpp"

namespace pdp {

// Brute-force ground truth at desk scale.

struct Enumeration {
  std::vector<Solution> tuples;  // filled when collect_tuples is on
  long long min_length = -1;     // -1: no disjoint system exists
  BigInt count_at_min = 0;
  BigInt total = 0;  // all disjoint systems regardless of length

  bool exists() const { return min_length >= 0; }
};

// Exhaustive backtracking over simple paths with vertex-disjointness pruning.
Enumeration enum_disjoint_paths(const Instance& instance,
                                bool collect_tuples = true,
                                int vertex_bound = 16);

// Edge-disjoint variant (per-path simple, vertices shareable across paths).
Enumeration enum_edge_disjoint_paths(const Instance& instance,
                                     bool collect_tuples = true,
                                     int vertex_bound = 12);

struct Cover {
  std::vector<int> successor;  // vertex -> next vertex along its cycle
  std::vector<long long> arc_xdeg;  // per vertex, degree of the chosen arc
  int cycle_count = 0;
  long long degree = 0;       // total encoded x-degree
  int net_axis_cross = 0;     // sum of dart shifts (0 without an axis)
  // The pairing realized by the k paths hiding in the cover, as label pairs.
  std::vector<std::pair<int, int>> realized_label_pairs;
  bool extra_nontrivial_cycle = false;

  int sign(int n_prime) const {
    return ((n_prime + cycle_count) % 2 == 0) ? 1 : -1;
  }
};

using CoverVisitor = std::function<void(const Cover&)>;

// Enumerates every cycle cover of the modified directed graph, reporting
// signs, degrees, realized pairings and (when dart shifts are supplied) net
// axis crossings.
void enum_cycle_covers(const ModifiedGraph& mg, const CoverVisitor& visit,
                       const std::vector<int>* dart_shift = nullptr,
                       int vertex_bound = 22);

// Signed tallies; by construction these must match the determinant
// coefficient by coefficient.
struct CoverTally {
  std::map<long long, BigInt> by_degree;
  std::map<std::pair<long long, int>, BigInt> by_degree_and_class;
};

CoverTally tally_covers(const ModifiedGraph& mg, int y_modulus = 0,
                        const std::vector<int>* dart_shift = nullptr,
                        int vertex_bound = 22);

Poly tally_polynomial(const std::map<long long, BigInt>& by_degree);

// --- Instance generation -------------------------------------------------

enum class TerminalOrder { kParallel, kSerial, kGeneral };

struct GenSpec {
  std::string family = "grid";  // grid | annulus | random-planar
  unsigned long long seed = 1;
  int k = 2;
  // grid
  int rows = 3, cols = 3;
  // annulus (circular ladder when rings == 2)
  int rings = 2, spokes = 4;
  int shift = 0;         // cyclic offset of sinks against sources
  bool mismatch = false; // deliberately inconsistent demand offsets
  // random-planar (polygon + non-crossing chords)
  int n = 8, chords = 3;
  // one-face families
  TerminalOrder order = TerminalOrder::kParallel;
  int max_weight = 1;  // > 1 draws random weights in [1, max_weight]
  bool edge_disjoint = false;
};

// Reproducible: the same spec yields the same instance, byte for byte.
Instance gen_instance(const GenSpec& spec);

}  // namespace pdp
