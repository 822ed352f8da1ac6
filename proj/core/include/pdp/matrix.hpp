#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "pdp/bigint.hpp"
#include "pdp/errors.hpp"

namespace pdp {

template <typename R>
class SquareMatrix {
 public:
  explicit SquareMatrix(int dim, R fill = R{})
      : dim_(dim), cells_(static_cast<std::size_t>(dim) * dim, fill) {}

  int dim() const { return dim_; }
  R& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * dim_ + c]; }
  const R& at(int r, int c) const {
    return cells_[static_cast<std::size_t>(r) * dim_ + c];
  }

  template <typename F>
  auto map(F&& f) const -> SquareMatrix<decltype(f(std::declval<const R&>()))> {
    using Out = decltype(f(std::declval<const R&>()));
    SquareMatrix<Out> out(dim_, f(cells_[0]));
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) out.at(r, c) = f(at(r, c));
    return out;
  }

 private:
  int dim_;
  std::vector<R> cells_;
};

// Exact determinant of an integer matrix via fraction-free Bareiss
// elimination (all intermediate divisions are exact).
BigInt det_integer(const SquareMatrix<BigInt>& mat);

// Exact determinant over any commutative ring with unity, including rings
// with zero divisors: the Mahajan-Vinay clow-sequence dynamic program.
// No divisions are performed; O(d^4) ring multiplications.
//
// Partial clow sequences are tracked by (head of open clow, current vertex);
// closing a clow flips the accumulated sign and either opens a clow with a
// strictly larger head or, on the d-th edge, contributes to the total. The
// final answer is (-1)^d times the accumulated total.
template <typename R>
R det_division_free(const SquareMatrix<R>& mat) {
  const int d = mat.dim();
  if (d == 0) {
    if constexpr (std::is_default_constructible_v<R>) {
      return ring_one(R{});
    } else {
      fail(ErrorCode::InternalInconsistency, "empty matrix over ring without default");
    }
  }
  const R zero = ring_zero(mat.at(0, 0));
  const R one = ring_one(mat.at(0, 0));
  if (d == 1) return mat.at(0, 0);

  // dp[h][v], meaningful for v >= h.
  std::vector<std::vector<R>> dp(d, std::vector<R>(d, zero));
  for (int h = 0; h < d; ++h) dp[h][h] = one;
  R total = zero;

  for (int step = 1; step <= d; ++step) {
    std::vector<std::vector<R>> next(d, std::vector<R>(d, zero));
    for (int h = 0; h < d; ++h) {
      for (int v = h; v < d; ++v) {
        const R& val = dp[h][v];
        if (ring_is_zero(val)) continue;
        // Extend the open clow with an edge v -> u, u strictly above the head.
        if (step < d) {
          for (int u = h + 1; u < d; ++u) {
            if (ring_is_zero(mat.at(v, u))) continue;
            next[h][u] += val * mat.at(v, u);
          }
        }
        // Close the clow with v -> h; sign flips per closed clow.
        if (ring_is_zero(mat.at(v, h))) continue;
        R closed = val * mat.at(v, h);
        if (step == d) {
          total -= closed;
        } else {
          for (int h2 = h + 1; h2 < d; ++h2) next[h2][h2] -= closed;
        }
      }
    }
    dp.swap(next);
  }
  if (d % 2 != 0) total = -total;
  return total;
}

}  // namespace pdp
