#include <doctest.h>

#include <random>

#include "powmat/linalg.hpp"
#include "powmat/smith_core.hpp"
#include "testutil.hpp"

using namespace powmat;
using testutil::rat;
using testutil::set_of;

namespace {

ExactMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  ExactMatrix m(static_cast<Index>(rows.size()),
                static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const Rational& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rationals normalize eagerly to lowest terms") {
  Rational r = rat(6, -4);
  CHECK(r.numerator() == Int(-3));
  CHECK(r.denominator() == Int(2));
  CHECK(!r.is_integer());
  CHECK(rat(8, 4).is_integer());
  CHECK(rat(8, 4).to_integer() == Int(2));
  CHECK(Rational::parse("13/44") == rat(13, 44));
  CHECK(Rational::parse("-7").is_integer());
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), DivisionByZeroError);
  CHECK_THROWS_AS(rat(1, 2) / Rational(0), DivisionByZeroError);
  CHECK_THROWS_AS(Rational::parse("x/3"), ParseError);
}

TEST_CASE("rational normalization holds under random arithmetic") {
  std::mt19937_64 rng(7001);
  std::uniform_int_distribution<long long> dist(-200, 200);
  for (int iter = 0; iter < 2000; ++iter) {
    long long p = dist(rng), q = dist(rng);
    if (q == 0) continue;
    Rational r = rat(p, q);
    CHECK(r.denominator() > Int(0));
    CHECK(powmat::gcd(r.numerator() < 0 ? -r.numerator() : r.numerator(),
                      r.denominator()) == Int(1));
    CHECK((r.denominator() == Int(1)) == r.is_integer());
  }
}

TEST_CASE("magnitudes beyond 64 bits survive") {
  Int big = ipow(Int(24), 11);
  CHECK(big == Int("1521681143169024"));
  CHECK(to_string(ipow(Int(10), 30)) == "1000000000000000000000000000000");
  CHECK(parse_int("-1521681143169024") == -big);
  CHECK_THROWS_AS(parse_int("12x"), ParseError);
}

TEST_CASE("bareiss determinant on pinned examples") {
  CHECK(bareiss_det(ExactMatrix(ExactMatrix::Identity(3, 3))) == Rational(1));
  CHECK(bareiss_det(from_rows({{1, 1}, {1, 2}})) == Rational(1));
  // gcd matrix of {1,2,3,12}
  ExactMatrix g = power_matrix({set_of("1,2,3,12"), 1, MatrixKind::Gcd});
  CHECK(bareiss_det(g) == Rational(16));
  // singular is a value, not an error
  CHECK(bareiss_det(from_rows({{1, 1}, {1, 1}})) == Rational(0));
}

TEST_CASE("bareiss agrees with cofactor expansion on random small matrices") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 400; ++iter) {
    Index n = 1 + static_cast<Index>(iter % 4);
    ExactMatrix m = testutil::random_int_matrix(rng, n, -4, 4);
    CHECK(bareiss_det(m) == testutil::cofactor_det(m));
  }
}

TEST_CASE("exact inverse on pinned examples") {
  ExactMatrix id = ExactMatrix::Identity(4, 4);
  CHECK(matrices_equal(exact_inverse(id), id));

  ExactMatrix m = from_rows({{1, 1}, {1, 2}});
  CHECK(matrices_equal(exact_inverse(m), from_rows({{2, -1}, {-1, 1}})));

  // the LCM matrix on {1,3,5,45}; its inverse begins 13/44, -2/11, ...
  ExactMatrix lcm1 = power_matrix({set_of("1,3,5,45"), 1, MatrixKind::Lcm});
  ExactMatrix inv = exact_inverse(lcm1);
  ExactMatrix want = from_rows({{rat(13, 44), rat(-2, 11), rat(-7, 44), rat(1, 22)},
                                {rat(-2, 11), rat(2, 33), rat(3, 22), rat(-1, 66)},
                                {rat(-7, 44), rat(3, 22), rat(7, 220), rat(-1, 110)},
                                {rat(1, 22), rat(-1, 66), rat(-1, 110), rat(1, 990)}});
  CHECK(matrices_equal(inv, want));
}

TEST_CASE("singular matrices raise an error carrying determinant zero") {
  ExactMatrix m = from_rows({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(exact_inverse(m), SingularMatrixError);
  try {
    exact_inverse(m);
  } catch (const SingularMatrixError& e) {
    CHECK(e.determinant() == "0");
  }
}

TEST_CASE("inverse times original is the identity, entry-exact") {
  std::mt19937_64 rng(4242);
  int done = 0;
  while (done < 120) {
    Index n = 1 + static_cast<Index>(done % 5);
    ExactMatrix m = testutil::random_int_matrix(rng, n, -5, 5);
    if (bareiss_det(m) == Rational(0)) continue;
    ExactMatrix inv = exact_inverse(m);
    CHECK(is_identity(inv * m));
    CHECK(is_identity(m * inv));
    ++done;
  }
}

TEST_CASE("integrality check finds the first failure in row-major order") {
  CHECK(integrality_check(ExactMatrix(ExactMatrix::Identity(3, 3))).ok);

  ExactMatrix half(1, 1);
  half(0, 0) = rat(1, 2);
  IntegralityResult r = integrality_check(half);
  CHECK(!r.ok);
  CHECK(r.row == 0);
  CHECK(r.col == 0);
  CHECK(r.value == rat(1, 2));

  // (S^3)(S^2)^{-1} on {1,2} is 1/3 [[3,0],[-4,7]]
  OrderedSet s = set_of("1,2");
  ExactMatrix q = power_matrix({s, 3, MatrixKind::Gcd}) *
                  exact_inverse(power_matrix({s, 2, MatrixKind::Gcd}));
  CHECK(matrices_equal(q, from_rows({{1, 0}, {rat(-4, 3), rat(7, 3)}})));
  r = integrality_check(q);
  CHECK(!r.ok);
  CHECK(r.row == 1);
  CHECK(r.col == 0);
  CHECK(r.value == rat(-4, 3));
}

TEST_CASE("integrality check is exactly the entrywise denominator test") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> num(-30, 30);
  std::uniform_int_distribution<long long> den(1, 4);
  for (int iter = 0; iter < 300; ++iter) {
    Index n = 1 + static_cast<Index>(iter % 4);
    ExactMatrix m(n, n);
    bool all_integral = true;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        m(i, j) = rat(num(rng), den(rng));
        all_integral = all_integral && m(i, j).is_integer();
      }
    }
    CHECK(integrality_check(m).ok == all_integral);
  }
}

TEST_CASE("determinant and inverse require square input") {
  ExactMatrix m(2, 3);
  m.setZero();
  CHECK_THROWS_AS(bareiss_det(m), DimensionMismatchError);
  CHECK_THROWS_AS(exact_inverse(m), DimensionMismatchError);
}
