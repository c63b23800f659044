#include <doctest.h>

#include "gen.hpp"
#include "nashblow/poly.hpp"

using namespace nashblow;

namespace {

const Field Q = Field::rationals();

Coefficient q(long num, long den = 1) { return Coefficient::from_rat(Q, ExactRat(num, den)); }

TruncatedSeries series(std::initializer_list<std::pair<long, long>> terms, long trunc) {
  TruncatedSeries s(Q, trunc);
  for (auto [d, c] : terms) s.add_to(d, q(c));
  return s;
}

}  // namespace

TEST_CASE("truncated series products drop high degrees") {
  const auto a = series({{0, 1}, {1, 1}}, 3);
  const auto sq = a * a * a * a;  // (1+x)^4 mod x^4
  CHECK(sq.coeff(0) == q(1));
  CHECK(sq.coeff(1) == q(4));
  CHECK(sq.coeff(3) == q(4));
  CHECK(sq.coeff(4).is_zero());
  CHECK(sq.max_degree() == 3);
  CHECK(series({}, 5).order() == std::nullopt);
  CHECK(series({{3, 2}, {7, 1}}, 9).order() == 3);
}

TEST_CASE("series ring axioms") {
  testgen::Gen gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const long t = gen.uniform(0, 8);
    const auto a = gen.series(Q, t, 4), b = gen.series(Q, t, 4), c = gen.series(Q, t, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!(a * b).is_zero()) CHECK((a * b).order() >= *a.order() + *b.order());
  }
}

TEST_CASE("bivariate ring axioms over Q and F_p") {
  testgen::Gen gen(11);
  for (const Field f : {Q, Field::prime(2), Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = gen.poly(f, 5, 4), b = gen.poly(f, 5, 4), c = gen.poly(f, 5, 4);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(poly_mul(a, b) == a * b);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("binomial powers") {
  const auto x = BivariatePoly::x(Q), y = BivariatePoly::y(Q);
  CHECK(BivariatePoly::binomial_power(Q, 3) == (x + y) * (x + y) * (x + y));
  CHECK(BivariatePoly::binomial_power(Q, 0) == BivariatePoly::constant(Q, q(1)));
  const Field f2 = Field::prime(2);
  const auto collapsed = BivariatePoly::binomial_power(f2, 2);
  CHECK(collapsed == BivariatePoly::x(f2) * BivariatePoly::x(f2) + BivariatePoly::y(f2) * BivariatePoly::y(f2));
  CHECK(BivariatePoly::binomial_power(Q, 4).is_homogeneous());
}

TEST_CASE("rendering is canonical") {
  const auto x = BivariatePoly::x(Q), y = BivariatePoly::y(Q);
  CHECK((x * x - y * y).to_string() == "x^2 - y^2");
  CHECK(BivariatePoly(Q).to_string() == "0");
}

TEST_CASE("division by (x+y)^m round-trips for m <= 12") {
  testgen::Gen gen(13);
  for (const Field f : {Q, Field::prime(3)}) {
    for (long m = 0; m <= 12; ++m) {
      for (int trial = 0; trial < 4; ++trial) {
        const auto cofactor = gen.poly(f, 6, 5);
        const auto product = cofactor * BivariatePoly::binomial_power(f, m);
        const auto back = divide_by_binomial_power(product, m);
        REQUIRE(back.has_value());
        CHECK(*back == cofactor);
        if (m > 0 && !cofactor.is_zero()) {
          // A lone monomial is never divisible by x + y.
          const auto perturbed = product + BivariatePoly::monomial(f, gen.uniform(0, 4), gen.uniform(0, 4),
                                                                   Coefficient::one(f));
          CHECK_FALSE(divide_by_binomial_power(perturbed, m).has_value());
        }
      }
    }
  }
  const auto x = BivariatePoly::x(Q);
  CHECK_FALSE(divide_by_binomial_power(x * x, 1).has_value());
}

TEST_CASE("slices and specializations") {
  const auto x = BivariatePoly::x(Q), y = BivariatePoly::y(Q);
  const auto f = x * x * x + x * x * y.scaled(q(3)) + y * y;
  CHECK(substitute_y_zero(f) == series({{3, 1}}, 3));
  CHECK(y_linear_coefficient(f) == series({{2, 3}}, 3));
  CHECK(f.y_slice(2) == series({{0, 1}}, 0));
  CHECK(f.y_slice(5).is_zero());
  CHECK(f.total_degree() == 3);
  CHECK(f.max_y_degree() == 2);
  CHECK_FALSE(f.is_homogeneous());
}

TEST_CASE("polynomials over different fields never combine") {
  const auto a = BivariatePoly::x(Q);
  const auto b = BivariatePoly::x(Field::prime(2));
  try {
    (void)(a + b);
    FAIL("expected FieldMismatch");
  } catch (const NashError& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  CHECK_THROWS_AS((void)(a * b), NashError);
}
