#include "catch2/catch_amalgamated.hpp"
#include "mtcdef/matrix.hpp"

#include <random>

using mtcdef::CycScalar;
using mtcdef::Mat;
using mtcdef::Rat;

namespace {

CycScalar rand_scalar(std::mt19937& rng, long n) {
  std::uniform_int_distribution<long> exp(0, n - 1);
  std::uniform_int_distribution<long> num(-4, 4);
  CycScalar s = CycScalar::zero();
  for (int t = 0; t < 2; ++t)
    s += Rat(num(rng)) * CycScalar::root_of_unity(n, exp(rng));
  return s;
}

Mat rand_mat(std::mt19937& rng, long r, long c, long n) {
  Mat m(r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m.at(i, j) = rand_scalar(rng, n);
  return m;
}

}  // namespace

TEST_CASE("determinant of fixed 2x2 over Q(i)", "[matrix]") {
  CycScalar i = CycScalar::root_of_unity(4, 1);
  Mat m(2, 2);
  m.at(0, 0) = CycScalar::one();
  m.at(0, 1) = i;
  m.at(1, 0) = i;
  m.at(1, 1) = CycScalar::one();
  // det = 1 - i^2 = 2
  REQUIRE(m.det() == CycScalar::from_rational(2));
  Mat inv = m.inverse();
  REQUIRE(inv * m == Mat::identity(2));
  REQUIRE(m * inv == Mat::identity(2));
}

TEST_CASE("Vandermonde determinant at 5th roots of unity", "[matrix]") {
  // det V(x0..x3) = prod_{i<j} (xj - xi), xi = zeta_5^i
  long n = 4;
  Mat v(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      v.at(i, j) = CycScalar::root_of_unity(5, i * j % 5);
  CycScalar expect = CycScalar::one();
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      expect *= CycScalar::root_of_unity(5, j) - CycScalar::root_of_unity(5, i);
  REQUIRE(v.det() == expect);
  REQUIRE(v.rank() == n);
}

TEST_CASE("inverse round trip on random matrices", "[matrix]") {
  std::mt19937 rng(4242);
  for (long n : {12L, 36L}) {
    for (int rep = 0; rep < 4; ++rep) {
      Mat m = rand_mat(rng, 4, 4, n);
      if (m.det().is_zero()) continue;
      Mat inv = m.inverse();
      REQUIRE(m * inv == Mat::identity(4));
      REQUIRE(inv * m == Mat::identity(4));
    }
  }
}

TEST_CASE("rref shape and idempotence", "[matrix]") {
  std::mt19937 rng(99);
  Mat a = rand_mat(rng, 3, 5, 12);
  // append a dependent row
  Mat m(4, 5);
  for (long j = 0; j < 5; ++j) {
    m.at(0, j) = a.at(0, j);
    m.at(1, j) = a.at(1, j);
    m.at(2, j) = a.at(2, j);
    m.at(3, j) = a.at(0, j) + a.at(1, j).scaled(Rat(3)) - a.at(2, j);
  }
  auto e = m.rref();
  REQUIRE(e.rank == 3);
  REQUIRE(long(e.pivots.size()) == 3);
  // pivot columns are unit vectors
  for (long i = 0; i < e.rank; ++i) {
    for (long r = 0; r < 4; ++r) {
      CycScalar want = (r == i) ? CycScalar::one() : CycScalar::zero();
      REQUIRE(e.m.at(r, e.pivots[i]) == want);
    }
  }
  auto e2 = e.m.rref();
  REQUIRE(e2.m == e.m);
}

TEST_CASE("kernel basis spans the kernel", "[matrix]") {
  std::mt19937 rng(7);
  Mat a = rand_mat(rng, 3, 6, 36);
  Mat ker = a.kernel_basis();
  REQUIRE(ker.cols() == 6 - a.rank());
  REQUIRE((a * ker).is_zero());
  REQUIRE(ker.rank() == ker.cols());
}

TEST_CASE("solve finds solutions and detects inconsistency", "[matrix]") {
  std::mt19937 rng(55);
  Mat a = rand_mat(rng, 4, 3, 12);
  std::vector<CycScalar> x0 = {CycScalar::one(),
                               CycScalar::root_of_unity(12, 5),
                               CycScalar::from_rational(Rat(-2, 3))};
  std::vector<CycScalar> b(4, CycScalar::zero());
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 3; ++j) b[i] += a.at(i, j) * x0[j];
  auto x = a.solve(b);
  REQUIRE(!x.empty());
  for (long i = 0; i < 4; ++i) {
    CycScalar acc = CycScalar::zero();
    for (long j = 0; j < 3; ++j) acc += a.at(i, j) * x[j];
    REQUIRE(acc == b[i]);
  }
  // perturb b outside the column space: if y spans the left kernel and
  // y_j != 0 then b + e_j fails y^T b = 0
  Mat cok = a.transpose().kernel_basis();
  REQUIRE(cok.cols() == 1);
  long j = 0;
  while (cok.at(j, 0).is_zero()) ++j;
  b[j] += CycScalar::one();
  REQUIRE(a.solve(b).empty());
}

TEST_CASE("matrix multiplication associativity", "[matrix]") {
  std::mt19937 rng(2718);
  Mat a = rand_mat(rng, 3, 4, 9);
  Mat b = rand_mat(rng, 4, 2, 9);
  Mat c = rand_mat(rng, 2, 5, 9);
  REQUIRE((a * b) * c == a * (b * c));
}
