#include <doctest.h>

#include "gen.hpp"
#include "nashblow/construction.hpp"
#include "nashblow/nash_curve.hpp"
#include "nashblow/oracle.hpp"

using namespace nashblow;

namespace {

CurveAlgebra monomial(std::vector<long> g) { return CurveAlgebra::monomial(NumericalSemigroup::from_generators(g)); }

}  // namespace

TEST_CASE("fixed degree examples") {
  CHECK_FALSE(deformation_oracle(monomial({2, 3}), 0, 8).regular);
  CHECK(deformation_oracle(monomial({2, 3}), 1, 8).regular);
  CHECK(deformation_oracle(monomial({5, 7}), 5, 40).regular);
  CHECK_FALSE(deformation_oracle(monomial({5, 7}), 11, 60).regular);
}

TEST_CASE("degree bound below the minimum is rejected") {
  const auto a = monomial({5, 7});
  CHECK(oracle_min_degree(a.semigroup(), 5) == 40);
  CHECK_NOTHROW(deformation_oracle(a, 5, 40));
  try {
    deformation_oracle(a, 5, 39);
    FAIL("expected Usage");
  } catch (const NashError& e) {
    CHECK(e.code() == ErrorCode::Usage);
  }
}

TEST_CASE("witnesses are verified elements of the symbolic power") {
  const auto a = monomial({3, 5});
  for (long n = 0; n <= 8; ++n) {
    const auto res = deformation_oracle(a, n, oracle_default_degree(a.semigroup(), n));
    CHECK(res.regular == is_regular(a.semigroup(), n));
    CHECK(res.basis_dimension == res.unknowns - res.rank);
    CHECK(res.basis_dimension > 0);
    // f_n itself lies in V_D and has order s_n; nothing of smaller order does.
    CHECK(res.a_n_order == res.s_n);
    if (res.regular) {
      REQUIRE(res.witness.has_value());
      CHECK(symbolic_power_membership(*res.witness, n, a));
      CHECK(*res.witness_g1_order < res.s_n);
      CHECK(y_linear_coefficient(*res.witness).order() == res.witness_g1_order);
    } else {
      CHECK_FALSE(res.witness.has_value());
    }
  }
}

TEST_CASE("calibrated runs over the catalog") {
  for (const auto& g : std::vector<std::vector<long>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 6, 7}, {3, 7, 8}}) {
    const auto a = monomial(g);
    for (long n = 0; n <= stabilization_index(a.semigroup()) + 3; ++n) {
      const auto o = deformation_oracle_calibrated(a, n);
      CHECK(o.regular() == is_regular(a.semigroup(), n));
      CHECK(o.enlarged.degree_bound == o.primary.degree_bound + 4);
      CHECK(o.enlarged.regular == o.primary.regular);
      CHECK(o.primary.hypothesis_holds);
    }
  }
}

TEST_CASE("general algebra") {
  const Field q = Field::rationals();
  TruncatedSeries x3(q, 40), x45(q, 40);
  x3.add_to(3, Coefficient::one(q));
  x45.add_to(4, Coefficient::one(q));
  x45.add_to(5, Coefficient::one(q));
  const auto a = CurveAlgebra::general({x3, x45}, 40);
  for (long n = 0; n <= 6; ++n) {
    const auto o = deformation_oracle_calibrated(a, n);
    CHECK(o.regular() == is_regular(a.semigroup(), n));
    if (o.primary.witness) CHECK(symbolic_power_membership(*o.primary.witness, n, a));
  }
}

TEST_CASE("the full semigroup is informational") {
  const auto a = monomial({1});
  const auto res = deformation_oracle_calibrated(a, 2).primary;
  CHECK_FALSE(res.hypothesis_holds);
  CHECK(res.regular);
}

TEST_CASE("random semigroups: oracle verdict equals the criterion") {
  testgen::Gen gen(23);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = monomial(gen.semigroup_generators(7));
    if (a.semigroup().is_full()) continue;
    const long stab = stabilization_index(a.semigroup());
    for (long n = 0; n <= std::min(stab + 1, 8L); ++n) {
      CHECK(deformation_oracle_calibrated(a, n).regular() == is_regular(a.semigroup(), n));
    }
  }
}
