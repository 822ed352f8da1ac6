#pragma once

#include <utility>
#include <vector>

#include "pdp/bigint.hpp"
#include "pdp/poly.hpp"

namespace pdp {

// Unique polynomial of degree <= degree_bound through the given points,
// computed with exact rational Newton differences. The result must clear to
// integer coefficients; a fractional coefficient signals an upstream bug and
// raises NonIntegerResult. Raises DuplicatePoint on repeated abscissae.
Poly interpolate(const std::vector<std::pair<BigInt, BigInt>>& points,
                 int degree_bound);

}  // namespace pdp
