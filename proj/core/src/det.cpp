#include "pdp/det.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "pdp/errors.hpp"
#include "pdp/interpolate.hpp"

namespace pdp {

BigInt det_integer(const SquareMatrix<BigInt>& mat) {
  const int d = mat.dim();
  if (d == 0) return BigInt(1);
  std::vector<std::vector<BigInt>> m(d, std::vector<BigInt>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m[r][c] = mat.at(r, c);

  BigInt prev(1);
  int swap_sign = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (sgn(m[k][k]) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < d; ++r) {
        if (sgn(m[r][k]) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return BigInt(0);
      m[k].swap(m[pivot]);
      swap_sign = -swap_sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return swap_sign > 0 ? m[d - 1][d - 1] : BigInt(-m[d - 1][d - 1]);
}

namespace {

int entry_degree(const Poly& p) { return p.degree().value_or(-1); }

int entry_degree(const CyclicPoly& p) {
  int best = -1;
  for (const auto& c : p.coeffs()) best = std::max(best, c.degree().value_or(-1));
  return best;
}

template <typename E>
int degree_bound_impl(const SquareMatrix<E>& mat) {
  int total = 0;
  for (int r = 0; r < mat.dim(); ++r) {
    int row_max = 0;
    for (int c = 0; c < mat.dim(); ++c) {
      row_max = std::max(row_max, entry_degree(mat.at(r, c)));
    }
    total += row_max;
  }
  return total;
}

BigInt coeff_mass(const Poly& p) {
  BigInt s(0);
  for (const auto& c : p.coeffs()) s += abs(c);
  return s;
}

BigInt coeff_mass(const CyclicPoly& p) {
  BigInt s(0);
  for (const auto& c : p.coeffs()) s += coeff_mass(c);
  return s;
}

// Upper bound on any single coefficient magnitude of det(mat): the permanent
// of the entrywise coefficient masses is bounded by the product of row sums.
template <typename E>
BigInt det_coeff_bound(const SquareMatrix<E>& mat) {
  BigInt bound(1);
  for (int r = 0; r < mat.dim(); ++r) {
    BigInt row(0);
    for (int c = 0; c < mat.dim(); ++c) row += coeff_mass(mat.at(r, c));
    if (sgn(row) == 0) return BigInt(1);  // zero row, det is 0 anyway
    bound *= row;
  }
  return bound;
}

BigInt kronecker_base(const BigInt& coeff_bound) {
  unsigned long bits = mpz_sizeinbase(coeff_bound.get_mpz_t(), 2) + 2;
  return shift_left(BigInt(1), bits);
}

// Balanced base-beta digit extraction: recovers coefficients with
// |coeff| < beta/2 from the single evaluation value.
Poly digits_to_poly(BigInt value, const BigInt& beta, int max_degree) {
  std::vector<BigInt> coeffs;
  const BigInt half = beta / 2;
  while (sgn(value) != 0) {
    if (static_cast<int>(coeffs.size()) > max_degree) {
      fail(ErrorCode::InternalInconsistency,
           "Kronecker digit extraction overflowed the degree bound");
    }
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), beta.get_mpz_t());
    if (r >= half) r -= beta;
    coeffs.push_back(r);
    value = divexact(value - r, beta);
  }
  return Poly(std::move(coeffs));
}

SquareMatrix<BigInt> eval_matrix(const SquareMatrix<Poly>& mat, const BigInt& x) {
  SquareMatrix<BigInt> out(mat.dim(), BigInt(0));
  for (int r = 0; r < mat.dim(); ++r)
    for (int c = 0; c < mat.dim(); ++c) out.at(r, c) = mat.at(r, c).evaluate(x);
  return out;
}

SquareMatrix<CyclicInt> eval_matrix(const SquareMatrix<CyclicPoly>& mat,
                                    const BigInt& x) {
  const int k = mat.at(0, 0).modulus();
  SquareMatrix<CyclicInt> out(mat.dim(), CyclicInt(k));
  for (int r = 0; r < mat.dim(); ++r) {
    for (int c = 0; c < mat.dim(); ++c) {
      CyclicInt e(k);
      for (int j = 0; j < k; ++j) e.coeff(j) = mat.at(r, c).coeff(j).evaluate(x);
      out.at(r, c) = e;
    }
  }
  return out;
}

void parallel_points(int count, int jobs, const std::function<void(int)>& work) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t]() {
      for (int i = t; i < count; i += jobs) work(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

int det_degree_bound(const SquareMatrix<Poly>& mat) {
  return degree_bound_impl(mat);
}

int det_degree_bound(const SquareMatrix<CyclicPoly>& mat) {
  return degree_bound_impl(mat);
}

Poly det_poly(const SquareMatrix<Poly>& mat, const DetOptions& opt) {
  if (mat.dim() == 0) return Poly(BigInt(1));
  const int bound = det_degree_bound(mat);

  if (bound > opt.kronecker_threshold) {
    const BigInt beta = kronecker_base(det_coeff_bound(mat));
    Poly result = digits_to_poly(det_integer(eval_matrix(mat, beta)), beta, bound);
    if (opt.check_residual &&
        result.evaluate(1) != det_integer(eval_matrix(mat, BigInt(1)))) {
      fail(ErrorCode::InternalInconsistency, "Kronecker residual check failed");
    }
    return result;
  }

  std::vector<std::pair<BigInt, BigInt>> points(bound + 1);
  parallel_points(bound + 1, opt.jobs, [&](int i) {
    points[i] = {BigInt(i), det_integer(eval_matrix(mat, BigInt(i)))};
  });
  Poly result = interpolate(points, bound);
  if (opt.check_residual) {
    const BigInt extra(bound + 1);
    if (result.evaluate(extra) != det_integer(eval_matrix(mat, extra))) {
      fail(ErrorCode::InternalInconsistency,
           "interpolation residual check failed; degree bound too small");
    }
  }
  return result;
}

CyclicPoly det_cyclic_poly(const SquareMatrix<CyclicPoly>& mat,
                           const DetOptions& opt) {
  const int k = mat.at(0, 0).modulus();
  const int bound = det_degree_bound(mat);

  if (bound > opt.kronecker_threshold) {
    const BigInt beta = kronecker_base(det_coeff_bound(mat));
    CyclicInt value = det_division_free(eval_matrix(mat, beta));
    CyclicPoly result(k);
    for (int j = 0; j < k; ++j) {
      result.coeff(j) = digits_to_poly(value.coeff(j), beta, bound);
    }
    if (opt.check_residual) {
      CyclicInt probe = det_division_free(eval_matrix(mat, BigInt(1)));
      for (int j = 0; j < k; ++j) {
        if (result.coeff(j).evaluate(1) != probe.coeff(j)) {
          fail(ErrorCode::InternalInconsistency, "Kronecker residual check failed");
        }
      }
    }
    return result;
  }

  std::vector<CyclicInt> values(bound + 1, CyclicInt(k));
  parallel_points(bound + 1, opt.jobs, [&](int i) {
    values[i] = det_division_free(eval_matrix(mat, BigInt(i)));
  });
  CyclicPoly result(k);
  for (int j = 0; j < k; ++j) {
    std::vector<std::pair<BigInt, BigInt>> points(bound + 1);
    for (int i = 0; i <= bound; ++i) points[i] = {BigInt(i), values[i].coeff(j)};
    result.coeff(j) = interpolate(points, bound);
  }
  if (opt.check_residual) {
    const BigInt extra(bound + 1);
    CyclicInt probe = det_division_free(eval_matrix(mat, extra));
    for (int j = 0; j < k; ++j) {
      if (result.coeff(j).evaluate(extra) != probe.coeff(j)) {
        fail(ErrorCode::InternalInconsistency,
             "interpolation residual check failed; degree bound too small");
      }
    }
  }
  return result;
}

}  // namespace pdp
