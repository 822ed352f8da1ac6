#pragma once

#include <optional>

#include "pdp/one_face.hpp"
#include "pdp/two_face.hpp"

namespace pdp {

struct Solution {
  std::vector<Path> paths;  // paths[i] runs s_i -> t_i
  long long total_length = 0;
};

// Simple, pairwise vertex-disjoint, correct endpoints, edges present and
// enabled, claimed length correct.
bool validate_solution(const Instance& instance, const Solution& sol);

// Dispatches to the case-appropriate counter.
CountResult count_instance(const Instance& instance,
                           const CountOverrides& overrides = {},
                           const DetOptions& opt = {});

// Deterministic greedy deletion with the counting oracle: an edge goes iff
// the shortest-system count at the original minimum stays positive without
// it; the survivors are exactly one shortest system.
Solution greedy_search(const Instance& instance, const DetOptions& opt = {});

struct RandomWeights {
  std::vector<long long> weights;  // b * w(e) + r_e
  long long base = 0;              // b, dominating any sum of the r_e
  unsigned long long seed = 0;
};

RandomWeights draw_random_weights(const Instance& instance,
                                  unsigned long long seed);

struct IsolationOutcome {
  // Absent on detected failure (never a wrong answer).
  std::optional<Solution> solution;
  unsigned long long seed = 0;
  bool isolated = false;  // min coefficient was +-1 under the drawn weights
};

// Isolation-lemma search: random low-order weights isolate the optimum with
// probability >= 1/2; membership then reads off min-degree shifts per edge.
// Validation gates the assembled solution, so failures are always detected.
IsolationOutcome isolation_search(const Instance& instance,
                                  unsigned long long seed,
                                  const DetOptions& opt = {});

}  // namespace pdp
