#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdp/errors.hpp"

namespace pdp {

// Perfect matching on the labels {1,...,2k} in standard form: every pair is
// stored (lo, hi) with lo < hi and the list is sorted by lo. A demand edge in
// standard form is directed lo -> hi.
class Pairing {
 public:
  Pairing(int k, std::vector<std::pair<int, int>> pairs);

  // The unique maximum-length pairing {(1,2k),(2,2k-1),...}.
  static Pairing parallel_pairing(int k);

  int k() const { return k_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int partner(int label) const { return partner_[label]; }

  bool operator==(const Pairing& o) const { return pairs_ == o.pairs_; }
  bool operator!=(const Pairing& o) const { return !(*this == o); }
  bool operator<(const Pairing& o) const { return pairs_ < o.pairs_; }

  std::string to_string() const;

 private:
  int k_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> partner_;  // indexed by label, [0] unused
};

enum class CrossingClass { kSeries, kParallel, kInterlacing };

// Relation of two standard-form demand edges with disjoint label sets:
// series (disjoint intervals), parallel (nested), interlacing (crossing).
CrossingClass classify(std::pair<int, int> h1, std::pair<int, int> h2);

// Sum of hi - lo over the demand edges. Strictly increases along
// compatibility, which is what makes the telescoping recursion finite.
int len(const Pairing& m);

// True iff no two demand edges interlace (outerplanar chord diagram).
bool is_noncrossing(const Pairing& m);

// All non-crossing pairings of {1,...,2k} in lexicographic order;
// exactly Catalan(k) of them.
std::vector<Pairing> enumerate_noncrossing(int k);

struct CompatibilityWitness {
  // Label cycles of the union of the two matchings, in traversal order
  // (alternating M / M' edges; shared pairs appear as 2-cycles).
  std::vector<std::vector<int>> cycles;
  // c_{M,M'}: every union cycle passes through demand edges, so this is
  // just the cycle count.
  int cycle_count = 0;
};

// Decides whether <m, m_prime> is a compatible ordered pair: directing m in
// standard form, some orientation of m_prime makes the union a disjoint set
// of directed cycles. Present for m == m_prime (k two-cycles). The relation
// is antisymmetric for distinct pairings.
std::optional<CompatibilityWitness> compatible(const Pairing& m,
                                               const Pairing& m_prime);

struct TelescopeEntry {
  Pairing pairing;
  long long coefficient;
};

// Coefficients gamma such that the signed cycle-cover sum for the base
// pairing alone equals sum gamma_{M'} * det(B_{M'}) over the entries.
struct TelescopeExpansion {
  Pairing base;
  std::vector<TelescopeEntry> entries;  // ordered by (len, pair list)
};

// Resolves the inclusion-exclusion recursion over the compatibility DAG.
// Compatible successors are strictly longer, so expanding pending pairings
// in increasing len order terminates at the parallel pairing.
TelescopeExpansion telescope(const Pairing& m0);

}  // namespace pdp
