#include "pdp/one_face.hpp"

namespace pdp {

Poly pairing_determinant(const ModifiedGraph& mg, const DetOptions& opt) {
  return det_poly(mg.matrix(), opt);
}

CountResult extract_count(const Poly& telescoped, const ModifiedGraph& mg) {
  CountResult result;
  result.polynomial = telescoped;
  auto lowest = telescoped.min_degree();
  if (!lowest) return result;  // no cover at all: count 0

  if (mg.raw()) {
    // Raw weights (isolation search): the degree is the weight itself and
    // the sign law does not apply monomial by monomial.
    result.min_length = *lowest;
    result.count = abs(telescoped.coeff(*lowest));
    return result;
  }

  const int k = mg.k();
  const long long best_weight = mg.decode_weight(*lowest);
  const auto& coeffs = telescoped.coeffs();

  BigInt total(0);
  for (std::size_t t = *lowest; t < coeffs.size(); ++t) {
    if (sgn(coeffs[t]) == 0) continue;
    long long degree = static_cast<long long>(t);
    if (mg.decode_weight(degree) != best_weight) continue;
    long long edge_count = mg.decode_edge_count(degree);
    int expected = ((k - edge_count) % 2 + 2) % 2 == 0 ? 1 : -1;
    if (sign(coeffs[t]) != expected) {
      fail(ErrorCode::SignMismatch,
           "monomial of degree " + std::to_string(degree) +
               " violates the (-1)^(k-l) sign law");
    }
    total += abs(coeffs[t]);
    // With a zero-weight cycle present, only the minimum encoded degree is a
    // clean count; higher degrees in the class mix in covers with extra
    // zero-weight cycles.
    if (mg.has_zero_weight_hazard()) break;
  }
  result.min_length = best_weight;
  result.count = total;
  return result;
}

CountResult count_one_face(const Instance& instance,
                           const CountOverrides& overrides,
                           const DetOptions& opt) {
  FaceSet faces = trace_faces(instance.graph);
  OneFaceLabeling labels = face_labels(instance, faces);
  Pairing m0 = labels.input_pairing();
  if (!is_noncrossing(m0)) {
    return CountResult{};  // interlacing demands cannot be routed disjointly
  }

  TelescopeExpansion expansion = telescope(m0);
  Poly sum;
  std::optional<ModifiedGraph> first_mg;
  for (const TelescopeEntry& entry : expansion.entries) {
    ModifiedGraph mg(instance.graph, labels.vertex_of_label, entry.pairing,
                     overrides);
    if (!first_mg) first_mg = mg;
    Poly det = pairing_determinant(mg, opt);
    sum += det.scaled(big(entry.coefficient));
  }
  return extract_count(sum, *first_mg);
}

bool decide_one_face(const Instance& instance, long long budget,
                     const DetOptions& opt) {
  CountResult r = count_one_face(instance, {}, opt);
  return r.exists() && r.min_length <= budget;
}

}  // namespace pdp
