#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ana/gf.hpp"
#include "ana/rng.hpp"

using namespace ana;

TEST_CASE("field axioms at random points") {
  for (std::uint64_t p : {kPrime31, kPrime61}) {
    Gf gf(p);
    Rng rng(deriveSeed(7, p));
    for (int i = 0; i < 200; ++i) {
      std::uint64_t a = rng.below(p), b = rng.below(p), c = rng.below(p);
      CHECK(gf.add(a, b) == gf.add(b, a));
      CHECK(gf.mul(a, b) == gf.mul(b, a));
      CHECK(gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c)));
      CHECK(gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c)));
      CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
      CHECK(gf.add(a, gf.neg(a)) == 0);
      CHECK(gf.sub(a, b) == gf.add(a, gf.neg(b)));
      if (a != 0) CHECK(gf.mul(a, gf.inv(a)) == 1);
      CHECK(gf.pow(a, 3) == gf.mul(a, gf.mul(a, a)));
    }
    CHECK(gf.pow(0, 0) == 1);
    CHECK_THROWS_AS(gf.inv(0), SingularMatrix);
    CHECK(gf.fromSigned(-1) == p - 1);
    CHECK(gf.fromSigned(static_cast<long long>(p)) == 0);
  }
}

TEST_CASE("matrix product and concatenation") {
  Gf gf;
  Matrix a(2, 3), b(3, 2);
  int v = 1;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) a.at(r, c) = v++;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) b.at(r, c) = v++;
  Matrix ab = matMul(gf, a, b);
  REQUIRE(ab.rows() == 2);
  REQUIRE(ab.cols() == 2);
  // [[1 2 3],[4 5 6]] * [[7 8],[9 10],[11 12]]
  CHECK(ab.at(0, 0) == 58);
  CHECK(ab.at(0, 1) == 64);
  CHECK(ab.at(1, 0) == 139);
  CHECK(ab.at(1, 1) == 154);

  Matrix h = hcat(a, a);
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 6);
  CHECK(h.at(1, 5) == a.at(1, 2));

  CHECK(matMul(gf, a, Matrix::identity(3)) == a);
}

TEST_CASE("rank, determinant, inverse") {
  Gf gf;
  Matrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(rank(gf, m) == 1);
  CHECK(det(gf, m) == 0);
  CHECK_THROWS_AS(invert(gf, m), SingularMatrix);

  m.at(1, 1) = 5;
  CHECK(rank(gf, m) == 2);
  CHECK(det(gf, m) == 1);
  Matrix inv = invert(gf, m);
  CHECK(matMul(gf, m, inv) == Matrix::identity(2));
  CHECK(matMul(gf, inv, m) == Matrix::identity(2));

  Matrix z(3, 4);
  CHECK(rank(gf, z) == 0);
  CHECK(z.isZero());
}

TEST_CASE("rank of a product never exceeds the factors") {
  Gf gf(kPrime31);
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    Matrix a(n, n), b(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        a.at(r, c) = rng.below(gf.modulus());
        b.at(r, c) = rng.below(4);  // frequently singular
      }
    int rab = rank(gf, matMul(gf, a, b));
    CHECK(rab <= rank(gf, a));
    CHECK(rab <= rank(gf, b));
    std::uint64_t d = det(gf, a);
    if (d != 0) CHECK(rank(gf, a) == n);
  }
}

TEST_CASE("deterministic sampling") {
  Gf gf;
  auto a = sampleUniform(gf, 123, 16);
  auto b = sampleUniform(gf, 123, 16);
  auto c = sampleUniform(gf, 124, 16);
  CHECK(a == b);
  CHECK(a != c);
  for (auto v : a) CHECK(v < gf.modulus());
}
