#pragma once

#include <optional>
#include <vector>

#include "pdp/cyclic.hpp"
#include "pdp/graph.hpp"
#include "pdp/matrix.hpp"
#include "pdp/pairing.hpp"
#include "pdp/poly.hpp"

namespace pdp {

// One directed arc of the modified graph. Graph arcs remember their source
// edge and dart; demand half-edges and self-loops have edge -1, dart -1 and
// x-degree 0.
struct Arc {
  int from = 0;
  int to = 0;
  long long xdeg = 0;  // exponent of x carried by the arc
  int edge = -1;       // originating primal edge, -1 for demand arcs / loops
  int dart = -1;       // originating primal dart (orientation of the arc)
};

// Per-call adjustments: disabled edges drop both arcs of an edge (counting in
// the graph minus those edges); replacement weights switch the matrix to raw
// mode, where the x-degree is the plain weight with no parity encoding
// (isolation search wants exactly that).
struct CountOverrides {
  const std::vector<char>* disabled_edges = nullptr;
  const std::vector<long long>* weights = nullptr;
};

// The directed graph of the modification step, realized as an arc list from
// which both the determinant matrices and the brute-force cover enumeration
// are built. Original edges become antiparallel arc pairs weighted
// x^{w'(e)}; each demand (lo, hi) in standard form contributes
// lo -> r_i -> hi at weight 0; non-special vertices carry unit self-loops.
//
// When any input weight differs from 1, w'(e) = (|E|+1) w(e) + 1, which makes
// the encoded degree of a cover determine both its true weight and its edge
// count (so equal-degree covers share a sign). Otherwise w'(e) = 1.
class ModifiedGraph {
 public:
  ModifiedGraph(const PlanarGraph& graph,
                const std::vector<int>& vertex_of_label, const Pairing& m,
                const CountOverrides& overrides = {});

  int original_vertex_count() const { return n_; }
  int vertex_count() const { return n_ + k_; }  // n' = n + k
  int k() const { return k_; }
  bool encoded() const { return encoded_; }
  bool raw() const { return raw_; }
  long long multiplier() const { return multiplier_; }
  int subdivision_vertex(int pair_index) const { return n_ + pair_index; }

  // Zero-weight edges let covers absorb extra zero-weight cycles (including
  // the 2-cycle on a single such edge) inside one weight class, so exact
  // counting must then restrict to the minimum encoded degree (EDPP gadget
  // edges trigger this).
  bool has_zero_weight_hazard() const { return zero_weight_hazard_; }

  bool is_special(int vertex) const { return special_[vertex]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Pairing& pairing() const { return pairing_; }
  const std::vector<int>& vertex_of_label() const { return vertex_of_label_; }

  // True weight and edge count encoded in a monomial degree.
  long long decode_weight(long long degree) const {
    return encoded_ ? degree / multiplier_ : degree;
  }
  long long decode_edge_count(long long degree) const {
    return encoded_ ? degree % multiplier_ : degree;
  }

  SquareMatrix<Poly> matrix() const;
  // Same matrix over Z[x][y]/(y^k_mod - 1) with the given per-dart y-shifts
  // (dart id -> exponent in {-1,0,+1}); used by the two-face solver.
  SquareMatrix<CyclicPoly> cyclic_matrix(int y_modulus,
                                         const std::vector<int>& dart_shift) const;

 private:
  int n_ = 0;
  int k_ = 0;
  bool encoded_ = false;
  bool raw_ = false;
  bool zero_weight_hazard_ = false;
  long long multiplier_ = 1;
  std::vector<bool> special_;
  std::vector<Arc> arcs_;
  Pairing pairing_;
  std::vector<int> vertex_of_label_;
};

// Spec-level modification step for the one-face pipeline: labels the
// terminals along the designated face and builds the modified graph for the
// given (necessarily non-crossing) pairing over those labels.
ModifiedGraph modify(const Instance& instance, const Pairing& m);

}  // namespace pdp
