#pragma once

#include "pdp/det.hpp"
#include "pdp/modify.hpp"

namespace pdp {

struct CountResult {
  // Minimum total length in original weight units; meaningful when count > 0.
  long long min_length = 0;
  BigInt count = 0;
  // The telescoped signed polynomial (encoded degrees); diagnostics.
  Poly polynomial;

  bool exists() const { return sgn(count) != 0; }
};

// W(<M,*>) = det(B_M) as an exact polynomial in x.
Poly pairing_determinant(const ModifiedGraph& mg, const DetOptions& opt = {});

// Counting core shared by count_one_face and the searches. Given the
// telescoped polynomial and the degree decoding, extracts (min length, count)
// and enforces the sign law (-1)^{k - edge count} on every monomial of the
// minimum-weight class.
CountResult extract_count(const Poly& telescoped, const ModifiedGraph& mg);

// Shortest-system count for a one-face instance. A crossing input pairing
// short-circuits to zero; parallel-order inputs telescope to a single
// determinant.
CountResult count_one_face(const Instance& instance,
                           const CountOverrides& overrides = {},
                           const DetOptions& opt = {});

// True iff a k-disjoint path system of total length <= budget exists.
bool decide_one_face(const Instance& instance, long long budget,
                     const DetOptions& opt = {});

}  // namespace pdp
