#pragma once

#include <vector>

#include "pdp/cyclic.hpp"
#include "pdp/matrix.hpp"
#include "pdp/poly.hpp"

namespace pdp {

struct DetOptions {
  // Above this x-degree bound, single-point Kronecker evaluation replaces
  // multi-point interpolation (identical exact result, one determinant
  // instead of D+1).
  int kronecker_threshold = 64;
  // Verify interpolated results at one extra evaluation point.
  bool check_residual = true;
  int jobs = 1;
};

// x-degree bound on det(mat): sum over rows of the max entry degree.
int det_degree_bound(const SquareMatrix<Poly>& mat);
int det_degree_bound(const SquareMatrix<CyclicPoly>& mat);

// det of a polynomial matrix, exact. Evaluates x at integer points and
// interpolates (or Kronecker-substitutes, see DetOptions), with Bareiss
// elimination on each evaluated integer matrix.
Poly det_poly(const SquareMatrix<Poly>& mat, const DetOptions& opt = {});

// det of a matrix over Z[x][y]/(y^k - 1), exact. Same x-point strategy;
// each evaluated matrix lives over the y-quotient ring and goes through the
// division-free determinant. Coefficients come back one Poly per y-class.
CyclicPoly det_cyclic_poly(const SquareMatrix<CyclicPoly>& mat,
                           const DetOptions& opt = {});

}  // namespace pdp
