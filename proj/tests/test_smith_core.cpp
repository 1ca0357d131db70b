#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "powmat/counterexample.hpp"
#include "powmat/smith_core.hpp"
#include "testutil.hpp"

using namespace powmat;
using testutil::rat;
using testutil::set_of;

TEST_CASE("power matrices on pinned examples") {
  // {1,u,v,uvw} with u=2, v=3, w=2, exponent 1, GCD kind
  ExactMatrix m = power_matrix({set_of("1,2,3,12"), 1, MatrixKind::Gcd});
  long long want[4][4] = {{1, 1, 1, 1}, {1, 2, 1, 2}, {1, 1, 3, 3}, {1, 2, 3, 12}};
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 4; ++j) CHECK(m(i, j) == Rational(want[i][j]));
  }

  ExactMatrix one = power_matrix({set_of("1"), 7, MatrixKind::Lcm});
  CHECK(one.rows() == 1);
  CHECK(one(0, 0) == Rational(1));

  // 5th power LCM matrix on {1,3,5,45}
  ExactMatrix l5 = power_matrix({set_of("1,3,5,45"), 5, MatrixKind::Lcm});
  CHECK(l5(0, 0) == Rational(1));
  CHECK(l5(1, 0) == Rational(243));
  CHECK(l5(2, 0) == Rational(3125));
  CHECK(l5(1, 2) == Rational(759375));
  CHECK(l5(1, 3) == Rational(Int("184528125")));
  CHECK(is_symmetric(l5));
}

TEST_CASE("dirichlet convolutions against the multiplicative oracle") {
  for (long long d = 1; d <= 300; ++d) {
    CHECK(xi_mobius(Int(d), 1) == testutil::multiplicative_jordan(Int(d), 1));
    CHECK(xi_mobius(Int(d), 3) == testutil::multiplicative_jordan(Int(d), 3));
  }
  // above the memo's exponent limit the direct divisor sum is used
  CHECK(xi_mobius(Int(12), 20) == testutil::multiplicative_jordan(Int(12), 20));
  for (long long d = 1; d <= 200; ++d) {
    CHECK(xi_inverse_mobius(Int(d), 2) ==
          testutil::multiplicative_inverse_convolution(Int(d), 2));
  }
}

TEST_CASE("alpha coefficients: filtered divisor sums") {
  OrderedSet s = set_of("1,2,3,12");
  CHECK(alpha_coeff(s, 1, 0) == Int(1));
  CHECK(alpha_coeff(s, 1, 2) == Int(2));
  CHECK(alpha_coeff(s, 1, 3) == Int(8));
  CHECK_THROWS_AS(alpha_coeff(set_of("2,3"), 1, 0), NotGcdClosedError);
  CHECK_THROWS_AS(alpha_coeff(s, 0, 0), InvalidInput);
  CHECK_THROWS_AS(alpha_coeff(s, 1, 4), InvalidInput);
}

TEST_CASE("alpha closed forms") {
  CHECK(alpha_closed(set_of("1,2,3,12"), 1, 3) == Int(8));  // 12-2-3+1
  CHECK(alpha_closed(set_of("1,2,4"), 2, 2) == Int(12));    // 16-4
  CHECK(alpha_closed(set_of("1,2,3,12"), 1, 0) == Int(1));
  // {1,2,3,5,30}: G(30) = {2,3,5}
  CHECK_THROWS_AS(alpha_closed(set_of("1,2,3,5,30"), 1, 4), TooManyGtdsError);
}

TEST_CASE("beta coefficients and closed forms") {
  OrderedSet s = set_of("1,2,3,12");
  CHECK(beta_coeff(s, 1, 0) == Rational(1));
  CHECK(beta_closed(s, 1, 0) == Rational(1));
  CHECK(beta_closed(s, 1, 3) == rat(1, 4));  // 1/12 - 1/2 - 1/3 + 1
  CHECK(beta_coeff(s, 1, 3) == rat(1, 4));
  CHECK(beta_closed(s, 1, 1) == rat(-1, 2));  // 1/2 - 1
  CHECK(beta_coeff(s, 1, 1) == rat(-1, 2));
}

TEST_CASE("c coefficients: mobius sums and the case table") {
  OrderedSet s = set_of("1,2,3,12");
  for (int j = 0; j < 4; ++j) {
    CHECK(c_coeff(s, j, j) == Int(1));
    CHECK(c_closed(s, j, j) == Int(1));
  }
  CHECK(c_coeff(s, 1, 3) == Int(-1));  // x_i = 2, x_j = 12: a greatest-type divisor
  CHECK(c_closed(s, 1, 3) == Int(-1));
  CHECK(c_coeff(s, 0, 3) == Int(1));  // x_i = 1 = (2,3): the gtd pair's gcd
  CHECK(c_closed(s, 0, 3) == Int(1));
  CHECK(c_coeff(s, 2, 1) == Int(0));  // 3 does not divide 2
  CHECK(c_closed(s, 2, 1) == Int(0));
  CHECK(c_coeff(s, 1, 2) == Int(0));  // 2 does not divide 3
  CHECK_THROWS_AS(c_closed(set_of("1,2,3,5,30"), 0, 4), TooManyGtdsError);
}

TEST_CASE("determinants by product formula match elimination") {
  CHECK(det_by_formula({set_of("1,2,3,12"), 1, MatrixKind::Gcd}) == Rational(16));
  CHECK(det_by_formula({set_of("1,2,3,12"), 1, MatrixKind::Lcm}) == Rational(432));
  CHECK(det_by_formula({set_of("1"), 3, MatrixKind::Gcd}) == Rational(1));
  CHECK_THROWS_AS(det_by_formula({set_of("2,3"), 1, MatrixKind::Gcd}),
                  NotGcdClosedError);

  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 60; ++iter) {
    OrderedSet s = testutil::random_gcd_closed(rng, 6, 60);
    for (unsigned a : {1u, 2u}) {
      CHECK(det_by_formula({s, a, MatrixKind::Gcd}) ==
            bareiss_det(power_matrix({s, a, MatrixKind::Gcd})));
      CHECK(det_by_formula({s, a, MatrixKind::Lcm}) ==
            bareiss_det(power_matrix({s, a, MatrixKind::Lcm})));
    }
  }
}

TEST_CASE("smith determinant on factor-closed sets") {
  CHECK(smith_det_fc(set_of("1,2,3,6"), ArithmeticFn::Power, 1) == Rational(4));
  CHECK(smith_det_fc(set_of("1"), ArithmeticFn::Power, 5) == Rational(1));
  CHECK(smith_det_fc(set_of("1,2,4"), ArithmeticFn::Power, 2) == Rational(36));
  CHECK_THROWS_AS(smith_det_fc(set_of("1,2,3,12"), ArithmeticFn::Power, 1),
                  NotFactorClosedError);

  // the reciprocal specialization equals elimination on (1/xi_a)((x_i,x_j))
  OrderedSet s = set_of("1,2,3,6");
  unsigned a = 2;
  ExactMatrix recip(s.size(), s.size());
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      recip(i, j) = Rational(Int(1), ipow(powmat::gcd(s.at(i), s.at(j)), a));
    }
  }
  CHECK(smith_det_fc(s, ArithmeticFn::InversePower, a) == bareiss_det(recip));
}

TEST_CASE("structural inverses on pinned examples") {
  ExactMatrix inv = structural_inverse({set_of("1,2"), 1, MatrixKind::Gcd});
  CHECK(inv(0, 0) == Rational(2));
  CHECK(inv(0, 1) == Rational(-1));
  CHECK(inv(1, 0) == Rational(-1));
  CHECK(inv(1, 1) == Rational(1));

  // LCM kind on {1,3,5,45} must reproduce the 13/44... inverse exactly
  OrderedSet s3 = set_of("1,3,5,45");
  ExactMatrix lcm_inv = structural_inverse({s3, 1, MatrixKind::Lcm});
  CHECK(matrices_equal(lcm_inv, exact_inverse(power_matrix({s3, 1, MatrixKind::Lcm}))));
  CHECK(lcm_inv(0, 0) == rat(13, 44));
  CHECK(lcm_inv(3, 3) == rat(1, 990));

  ExactMatrix one = structural_inverse({set_of("1"), 1, MatrixKind::Lcm});
  CHECK(one(0, 0) == Rational(1));

  CHECK_THROWS_AS(structural_inverse({set_of("1,2,3,5,30"), 1, MatrixKind::Lcm}),
                  TooManyGtdsError);
  // GCD kind has no gtd restriction
  ExactMatrix wide = structural_inverse({set_of("1,2,3,5,30"), 1, MatrixKind::Gcd});
  CHECK(is_identity(wide * power_matrix({set_of("1,2,3,5,30"), 1, MatrixKind::Gcd})));
}

TEST_CASE("structural inverse times power matrix is the identity") {
  std::mt19937_64 rng(808);
  for (int iter = 0; iter < 40; ++iter) {
    OrderedSet s = testutil::random_gcd_closed(rng, 6, 60);
    for (unsigned a : {1u, 2u}) {
      ExactMatrix g = power_matrix({s, a, MatrixKind::Gcd});
      CHECK(is_identity(structural_inverse({s, a, MatrixKind::Gcd}) * g));
      CHECK(is_identity(g * structural_inverse({s, a, MatrixKind::Gcd})));
      if (s.max_gtd() <= 2) {
        ExactMatrix l = power_matrix({s, a, MatrixKind::Lcm});
        CHECK(is_identity(structural_inverse({s, a, MatrixKind::Lcm}) * l));
      }
    }
  }
}

TEST_CASE("closed forms equal the mobius sums exhaustively") {
  // every gcd-closed set with n <= 6, elements <= 60, max_gtd <= 2, at a = 1;
  // wider exponents are swept in the acceptance suite
  long long sets = 0;
  for (int n = 1; n <= 6; ++n) {
    enumerate_gcd_closed(n, Int(60), [&](const OrderedSet& s) {
      if (s.max_gtd() > 2) return true;
      ++sets;
      for (int k = 0; k < s.size(); ++k) {
        if (alpha_closed(s, 1, k) != alpha_coeff(s, 1, k)) {
          FAIL("alpha mismatch on " << s.str() << " at k=" << k);
          return false;
        }
        if (beta_closed(s, 1, k) != beta_coeff(s, 1, k)) {
          FAIL("beta mismatch on " << s.str() << " at k=" << k);
          return false;
        }
      }
      for (int j = 0; j < s.size(); ++j) {
        for (int i = 0; i <= j; ++i) {
          if (c_closed(s, i, j) != c_coeff(s, i, j)) {
            FAIL("c mismatch on " << s.str() << " at (" << i << "," << j << ")");
            return false;
          }
        }
      }
      return true;
    });
  }
  CHECK(sets > 800000);  // the sweep is genuinely exhaustive
}

TEST_CASE("alpha stays positive and beta nonzero on gcd-closed sets") {
  std::mt19937_64 rng(909);
  for (int iter = 0; iter < 150; ++iter) {
    OrderedSet s = testutil::random_gcd_closed(rng, 6, 80);
    for (unsigned a : {1u, 2u, 3u}) {
      for (int k = 0; k < s.size(); ++k) {
        CHECK(alpha_coeff(s, a, k) > Int(0));
        if (s.max_gtd() <= 2) CHECK(!beta_coeff(s, a, k).is_zero());
      }
    }
  }
}

TEST_CASE("convolution values are consistent under concurrent evaluation") {
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&ok, t]() {
      unsigned a = 1 + static_cast<unsigned>(t % 3);
      for (long long d = 1; d <= 400; ++d) {
        if (xi_mobius(Int(d), a) != testutil::multiplicative_jordan(Int(d), a))
          ok = false;
        if (xi_inverse_mobius(Int(d), a) !=
            testutil::multiplicative_inverse_convolution(Int(d), a))
          ok = false;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(ok);
}

TEST_CASE("coefficient tables collect all three families") {
  OrderedSet s = set_of("1,2,3,12");
  CoefficientTable t = coefficient_table(s, 1);
  CHECK(t.n == 4);
  CHECK(t.alpha == std::vector<Int>{Int(1), Int(1), Int(2), Int(8)});
  CHECK(t.beta[3] == rat(1, 4));
  CHECK(t.c_at(1, 3) == Int(-1));
  CHECK(t.c_at(0, 3) == Int(1));
  CHECK(t.c_at(3, 3) == Int(1));
  CHECK(t.c_at(2, 0) == Int(0));

  Int alpha_product = 1;
  for (const Int& v : t.alpha) alpha_product *= v;
  CHECK(Rational(alpha_product) == bareiss_det(power_matrix({s, 1, MatrixKind::Gcd})));
}
