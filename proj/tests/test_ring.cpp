#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdp/det.hpp"
#include "pdp/interpolate.hpp"
#include "helpers.hpp"
#include "ring_oracles.hpp"

using namespace pdp;

namespace {

SquareMatrix<BigInt> random_int_matrix(std::mt19937_64& rng, int d, int span) {
  SquareMatrix<BigInt> m(d, BigInt(0));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      m.at(r, c) = pdp::testing::random_bigint(rng, -span, span);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("integer determinant on fixed examples") {
  SquareMatrix<BigInt> id3(3, BigInt(0));
  for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
  CHECK(det_integer(id3) == 1);

  SquareMatrix<BigInt> swap2(2, BigInt(0));
  swap2.at(0, 1) = 1;
  swap2.at(1, 0) = 1;
  CHECK(det_integer(swap2) == -1);
}

TEST_CASE("integer determinant matches cofactor expansion") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 1 + static_cast<int>(rng() % 5);
    auto m = random_int_matrix(rng, d, 9);
    CHECK(det_integer(m) == pdp::testing::det_cofactor(m));
  }
}

TEST_CASE("division-free determinant over the quotient ring") {
  SquareMatrix<CyclicInt> id2(2, CyclicInt::constant(3, BigInt(1)));
  id2.at(0, 1) = CyclicInt(3);
  id2.at(1, 0) = CyclicInt(3);
  CHECK(det_division_free(id2) == CyclicInt::constant(3, BigInt(1)));

  // diag(y, y^2) over k=3: det = y^3 = 1
  SquareMatrix<CyclicInt> diag(2, CyclicInt(3));
  diag.at(0, 0) = CyclicInt::monomial(3, BigInt(1), 1);
  diag.at(1, 1) = CyclicInt::monomial(3, BigInt(1), 2);
  CHECK(det_division_free(diag) == CyclicInt::constant(3, BigInt(1)));
}

TEST_CASE("division-free determinant matches permutation expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);
    int d = 2 + static_cast<int>(rng() % 3);  // up to 4x4
    SquareMatrix<CyclicInt> m(d, CyclicInt(k));
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (rng() % 4 == 0) continue;  // keep some zeros
        m.at(r, c) = CyclicInt::monomial(
            k, pdp::testing::random_bigint(rng, -3, 3), rng() % k);
      }
    }
    CHECK(det_division_free(m) == pdp::testing::det_permutation(m));
  }
}

TEST_CASE("division-free agrees with Bareiss on constant embeddings") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 1 + static_cast<int>(rng() % 6);
    auto m = random_int_matrix(rng, d, 6);
    int k = 1 + static_cast<int>(rng() % 4);
    SquareMatrix<CyclicInt> embedded(d, CyclicInt(k));
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        embedded.at(r, c) = CyclicInt::constant(k, m.at(r, c));
      }
    }
    CHECK(det_division_free(embedded) ==
          CyclicInt::constant(k, det_integer(m)));
  }
}

TEST_CASE("determinant is multiplicative on block diagonals") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int da = 1 + static_cast<int>(rng() % 3);
    int db = 1 + static_cast<int>(rng() % 3);
    auto a = random_int_matrix(rng, da, 5);
    auto b = random_int_matrix(rng, db, 5);
    SquareMatrix<BigInt> block(da + db, BigInt(0));
    for (int r = 0; r < da; ++r)
      for (int c = 0; c < da; ++c) block.at(r, c) = a.at(r, c);
    for (int r = 0; r < db; ++r)
      for (int c = 0; c < db; ++c) block.at(da + r, da + c) = b.at(r, c);
    CHECK(det_integer(block) == det_integer(a) * det_integer(b));
  }
}

TEST_CASE("quotient ring multiplication") {
  CHECK(CyclicInt::monomial(3, BigInt(1), 2) * CyclicInt::monomial(3, BigInt(1), 2) ==
        CyclicInt::monomial(3, BigInt(1), 1));
  // (1+y)(1-y) = 0 for k=2: the ring has zero divisors.
  CyclicInt a(2, {BigInt(1), BigInt(1)});
  CyclicInt b(2, {BigInt(1), BigInt(-1)});
  CHECK((a * b).is_zero());
  CHECK(CyclicInt::monomial(4, BigInt(1), 3) * CyclicInt::monomial(4, BigInt(1), 1) ==
        CyclicInt::constant(4, BigInt(1)));
  CHECK_THROWS_AS(CyclicInt(2) + CyclicInt(3), Error);
}

TEST_CASE("quotient ring multiplication is commutative and associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 1 + static_cast<int>(rng() % 5);
    auto rand_elem = [&]() {
      CyclicInt e(k);
      for (int i = 0; i < k; ++i) {
        e.coeff(i) = pdp::testing::random_bigint(rng, -4, 4);
      }
      return e;
    };
    CyclicInt a = rand_elem(), b = rand_elem(), c = rand_elem();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("interpolation on fixed examples") {
  Poly p = interpolate({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(2)}, {BigInt(2), BigInt(5)}}, 2);
  CHECK(p == Poly({BigInt(1), BigInt(0), BigInt(1)}));  // x^2 + 1

  Poly constant = interpolate({{BigInt(0), BigInt(7)}, {BigInt(1), BigInt(7)}}, 1);
  CHECK(constant == Poly(BigInt(7)));

  CHECK_THROWS_AS(
      interpolate({{BigInt(0), BigInt(1)}, {BigInt(0), BigInt(2)}}, 1), Error);
}

TEST_CASE("interpolation round-trips evaluation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int deg = static_cast<int>(rng() % 7);
    std::vector<BigInt> coeffs(deg + 1);
    for (auto& c : coeffs) c = pdp::testing::random_bigint(rng, -20, 20);
    Poly p(coeffs);
    std::vector<std::pair<BigInt, BigInt>> points;
    for (int x = 0; x <= deg; ++x) points.push_back({BigInt(x), p.evaluate(BigInt(x))});
    CHECK(interpolate(points, deg) == p);
  }
}

TEST_CASE("polynomial matrix determinant: both strategies agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    int d = 2 + static_cast<int>(rng() % 4);
    SquareMatrix<Poly> m(d, Poly());
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (rng() % 3 == 0) continue;
        m.at(r, c) = Poly::monomial(pdp::testing::random_bigint(rng, -3, 3),
                                    static_cast<int>(rng() % 5));
      }
    }
    DetOptions interp_only;
    interp_only.kronecker_threshold = 1 << 20;
    DetOptions kron_only;
    kron_only.kronecker_threshold = 0;
    CHECK(det_poly(m, interp_only) == det_poly(m, kron_only));
  }
}

TEST_CASE("antiparallel x-arcs give determinant -x^2") {
  SquareMatrix<Poly> m(2, Poly());
  m.at(0, 1) = Poly::monomial(BigInt(1), 1);
  m.at(1, 0) = Poly::monomial(BigInt(1), 1);
  CHECK(det_poly(m) == Poly::monomial(BigInt(-1), 2));
}

TEST_CASE("cyclic polynomial matrix determinant: strategies agree") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    int d = 2 + static_cast<int>(rng() % 3);
    SquareMatrix<CyclicPoly> m(d, CyclicPoly(k));
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (rng() % 3 == 0) continue;
        m.at(r, c) = CyclicPoly::monomial(
            k,
            Poly::monomial(pdp::testing::random_bigint(rng, -2, 2),
                           static_cast<int>(rng() % 4)),
            rng() % k);
      }
    }
    DetOptions interp_only;
    interp_only.kronecker_threshold = 1 << 20;
    DetOptions kron_only;
    kron_only.kronecker_threshold = 0;
    CyclicPoly a = det_cyclic_poly(m, interp_only);
    CyclicPoly b = det_cyclic_poly(m, kron_only);
    CHECK(a == b);
  }
}

TEST_CASE("zero polynomial degree sentinel stays out of minima") {
  Poly zero;
  CHECK(zero.is_zero());
  CHECK(!zero.degree().has_value());
  CHECK(!zero.min_degree().has_value());
  Poly p = Poly::monomial(BigInt(4), 3);
  CHECK(p.min_degree() == 3);
  CHECK((p - p).is_zero());
}
