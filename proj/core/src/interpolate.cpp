#include "pdp/interpolate.hpp"

#include "pdp/errors.hpp"

namespace pdp {

Poly interpolate(const std::vector<std::pair<BigInt, BigInt>>& points,
                 int degree_bound) {
  const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (points.size() < need) {
    fail(ErrorCode::DuplicatePoint,
         "need degree_bound+1 points, got " + std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        fail(ErrorCode::DuplicatePoint,
             "repeated abscissa " + to_string(points[i].first));
      }
    }
  }

  const std::size_t m = need;
  // Newton divided differences over exact rationals.
  std::vector<BigRat> diff(m);
  for (std::size_t i = 0; i < m; ++i) diff[i] = BigRat(points[i].second);
  std::vector<BigRat> coeffs(m);
  coeffs[0] = diff[0];
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      BigRat dx(points[i].first - points[i - level].first);
      diff[i] = (diff[i] - diff[i - 1]) / dx;
      diff[i].canonicalize();
    }
    coeffs[level] = diff[level];
  }

  // Expand the Newton form sum_j coeffs[j] * prod_{i<j} (x - x_i).
  std::vector<BigRat> acc(m, BigRat(0));
  std::vector<BigRat> basis(m, BigRat(0));
  basis[0] = 1;
  std::size_t basis_len = 1;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < basis_len; ++i) acc[i] += coeffs[j] * basis[i];
    if (j + 1 < m) {
      // basis *= (x - x_j)
      BigRat xj(points[j].first);
      for (std::size_t i = basis_len; i-- > 0;) {
        BigRat shifted = basis[i];
        basis[i] = -xj * basis[i];
        if (i + 1 < m) basis[i + 1] += shifted;
      }
      ++basis_len;
    }
  }

  std::vector<BigInt> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    acc[i].canonicalize();
    if (acc[i].get_den() != 1) {
      fail(ErrorCode::NonIntegerResult,
           "coefficient of degree " + std::to_string(i) + " is not integral");
    }
    out[i] = acc[i].get_num();
  }
  return Poly(std::move(out));
}

}  // namespace pdp
