#include "pdp/modify.hpp"

namespace pdp {

ModifiedGraph::ModifiedGraph(const PlanarGraph& graph,
                             const std::vector<int>& vertex_of_label,
                             const Pairing& m, const CountOverrides& overrides)
    : n_(graph.vertex_count()),
      k_(m.k()),
      pairing_(m),
      vertex_of_label_(vertex_of_label) {
  const int m_edges = graph.edge_count();
  raw_ = overrides.weights != nullptr;
  auto weight_of = [&](int e) -> long long {
    return raw_ ? (*overrides.weights)[e] : graph.edge(e).weight;
  };

  if (raw_) {
    encoded_ = false;
    multiplier_ = 1;
  } else {
    encoded_ = !graph.all_unit_weights();
    multiplier_ = encoded_ ? m_edges + 1 : 1;
  }

  if (encoded_) {
    // Any zero-weight edge yields a zero-weight directed 2-cycle on its
    // antiparallel arcs, which can pad covers within a weight class.
    for (int e = 0; e < m_edges; ++e) {
      if (overrides.disabled_edges && (*overrides.disabled_edges)[e]) continue;
      if (graph.edge(e).weight == 0) {
        zero_weight_hazard_ = true;
        break;
      }
    }
  }

  special_.assign(vertex_count(), false);
  for (int label = 1; label <= 2 * k_; ++label) {
    special_[vertex_of_label[label]] = true;
  }
  for (int i = 0; i < k_; ++i) special_[subdivision_vertex(i)] = true;

  for (int e = 0; e < m_edges; ++e) {
    if (overrides.disabled_edges && (*overrides.disabled_edges)[e]) continue;
    const Edge& ed = graph.edge(e);
    long long deg = encoded_ ? multiplier_ * weight_of(e) + 1 : weight_of(e);
    arcs_.push_back({ed.u, ed.v, deg, e, make_dart(e, 0)});
    arcs_.push_back({ed.v, ed.u, deg, e, make_dart(e, 1)});
  }
  for (int i = 0; i < k_; ++i) {
    const auto& [lo, hi] = m.pairs()[i];
    arcs_.push_back({vertex_of_label[lo], subdivision_vertex(i), 0, -1, -1});
    arcs_.push_back({subdivision_vertex(i), vertex_of_label[hi], 0, -1, -1});
  }
  for (int v = 0; v < vertex_count(); ++v) {
    if (!special_[v]) arcs_.push_back({v, v, 0, -1, -1});
  }
}

SquareMatrix<Poly> ModifiedGraph::matrix() const {
  SquareMatrix<Poly> b(vertex_count(), Poly());
  for (const Arc& a : arcs_) {
    b.at(a.from, a.to) += Poly::monomial(BigInt(1), static_cast<int>(a.xdeg));
  }
  return b;
}

SquareMatrix<CyclicPoly> ModifiedGraph::cyclic_matrix(
    int y_modulus, const std::vector<int>& dart_shift) const {
  SquareMatrix<CyclicPoly> b(vertex_count(), CyclicPoly(y_modulus));
  for (const Arc& a : arcs_) {
    int shift = a.dart >= 0 ? dart_shift[a.dart] : 0;
    b.at(a.from, a.to) += CyclicPoly::monomial(
        y_modulus, Poly::monomial(BigInt(1), static_cast<int>(a.xdeg)), shift);
  }
  return b;
}

ModifiedGraph modify(const Instance& instance, const Pairing& m) {
  if (!is_noncrossing(m)) {
    fail(ErrorCode::CrossingPairing,
         "modification step needs a non-crossing pairing, got " + m.to_string());
  }
  FaceSet faces = trace_faces(instance.graph);
  OneFaceLabeling labels = face_labels(instance, faces);
  return ModifiedGraph(instance.graph, labels.vertex_of_label, m);
}

}  // namespace pdp
