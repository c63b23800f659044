#include <doctest.h>

#include "gen.hpp"
#include "nashblow/construction.hpp"
#include "nashblow/nash_curve.hpp"

using namespace nashblow;

namespace {

const Field Q = Field::rationals();

CurveAlgebra general_3_4() {
  TruncatedSeries a(Q, 40), b(Q, 40);
  a.add_to(3, Coefficient::one(Q));
  b.add_to(4, Coefficient::one(Q));
  b.add_to(5, Coefficient::one(Q));
  return CurveAlgebra::general({a, b}, 40);
}

BivariatePoly xy(long i, long j, long c = 1) { return BivariatePoly::monomial(Q, i, j, Coefficient::from_int(Q, c)); }

const std::vector<std::vector<long>> kCatalog{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {5, 7}, {4, 6, 7}, {3, 7, 8}};

}  // namespace

TEST_CASE("index sets") {
  const auto cusp = NumericalSemigroup::from_generators({2, 3});
  const auto a = index_sets(cusp, 1, 0);
  CHECK(a.t_set == std::vector<long>{1});
  CHECK(a.u_set == std::vector<long>{1, 3});
  const auto full = NumericalSemigroup::from_generators({1});
  for (long n = 0; n < 5; ++n) {
    const auto b = index_sets(full, n, 0);
    CHECK(b.t_set.empty());
    CHECK(b.u_set == std::vector<long>{n + 1});
  }
  const auto s57 = NumericalSemigroup::from_generators({5, 7});
  CHECK(index_sets(s57, 0, 0).u_set == std::vector<long>{1, 2, 3, 4, 5});
  // #u = l_n + j + 1 and m >= 0 throughout.
  for (const auto& g : kCatalog) {
    const auto s = NumericalSemigroup::from_generators(g);
    for (long n = 0; n <= 15; ++n) {
      for (long j = 0; j <= 30; ++j) {
        const auto sets = index_sets(s, n, j);
        CHECK(sets.u_set.size() == static_cast<std::size_t>(s.l_n(n) + j + 1));
        CHECK(sets.m >= 0);
        CHECK(std::is_sorted(sets.u_set.begin(), sets.u_set.end()));
        for (long v : sets.s_set) CHECK(s.contains(v));
        for (long t : sets.t_set) CHECK_FALSE(s.contains(t));
      }
    }
  }
}

TEST_CASE("f_{n,0} examples") {
  CHECK(build_f_n0(NumericalSemigroup::from_generators({2, 3}), 0) == xy(2, 0) - xy(0, 2));
  const auto full = NumericalSemigroup::from_generators({1});
  for (long n = 0; n < 6; ++n) CHECK(build_f_n0(full, n) == BivariatePoly::binomial_power(Q, n + 1));
  const auto f = build_f_n0(NumericalSemigroup::from_generators({5, 7}), 0);
  CHECK(f.is_homogeneous());
  CHECK(f.total_degree() == 5);
  for (long t = 1; t <= 4; ++t) CHECK(f.coeff(t, 5 - t).is_zero());
  CHECK(f.coeff(5, 0).is_one());
  CHECK(divide_by_binomial_power(f, 1).has_value());
}

TEST_CASE("f_{n,0} pattern over the catalog") {
  for (const auto& g : kCatalog) {
    const auto s = NumericalSemigroup::from_generators(g);
    for (long n = 0; n <= stabilization_index(s) + 3; ++n) {
      const auto f = build_f_n0(s, n);
      const long s_n = s.nth_element(n);
      CHECK(f.is_homogeneous());
      CHECK(f.total_degree() == s_n);
      CHECK(f.coeff(s_n, 0).is_one());
      for (long t : s.gaps()) {
        if (t < s_n) CHECK(f.coeff(t, s_n - t).is_zero());
      }
      CHECK(divide_by_binomial_power(f, n + 1).has_value());
    }
  }
}

TEST_CASE("monomial algebras: the recurrence collapses") {
  for (const auto& g : kCatalog) {
    const auto algebra = CurveAlgebra::monomial(NumericalSemigroup::from_generators(g));
    for (long n = 0; n <= stabilization_index(algebra.semigroup()) + 3; ++n) {
      const auto st = build_f_n(algebra, n);
      CHECK(st.all_checks_pass());
      for (std::size_t j = 1; j < st.parts.size(); ++j) CHECK(st.parts[j].is_zero());
      CHECK(st.f_n == st.parts.front());
      CHECK(symbolic_power_membership(st.f_n, n, algebra));
      const auto cert = extract_g_n(st);
      CHECK(cert.regular == is_regular(algebra.semigroup(), n));
    }
  }
}

TEST_CASE("<5,7>, n = 5") {
  const auto algebra = CurveAlgebra::monomial(NumericalSemigroup::from_generators({5, 7}));
  const auto st = build_f_n(algebra, 5);
  CHECK(st.f_n.is_homogeneous());
  CHECK(st.f_n.total_degree() == 15);
  CHECK(substitute_y_zero(st.f_n) == TruncatedSeries::monomial(Q, 15, Coefficient::one(Q), 15));
  const auto cert = extract_g_n(st);
  CHECK(cert.regular);
  CHECK(cert.ord_g_n == 14);
  CHECK_FALSE(extract_g_n(build_f_n(algebra, 11)).regular);
}

TEST_CASE("certificates for the cusp") {
  const auto algebra = CurveAlgebra::monomial(NumericalSemigroup::from_generators({2, 3}));
  const auto c0 = extract_g_n(build_f_n(algebra, 0));
  CHECK(c0.g_n.is_zero());
  CHECK_FALSE(c0.ord_g_n.has_value());
  CHECK_FALSE(c0.regular);
  CHECK(extract_g_n(build_f_n(algebra, 1)).regular);
}

TEST_CASE("general algebra: nontrivial tails") {
  const auto algebra = general_3_4();
  const auto st = build_f_n(algebra, 1);
  CHECK(st.all_checks_pass());
  const bool some_tail = std::any_of(st.parts.begin() + 1, st.parts.end(), [](const auto& p) { return !p.is_zero(); });
  CHECK(some_tail);
  for (std::size_t j = 0; j < st.parts.size(); ++j) {
    const auto& part = st.parts[j];
    if (part.is_zero()) continue;
    CHECK(part.is_homogeneous());
    CHECK(part.total_degree() == st.s_n + static_cast<long>(j));
    CHECK(divide_by_binomial_power(part, 2).has_value());
  }
  CHECK(symbolic_power_membership(st.f_n, 1, algebra));
  for (long n = 0; n <= 6; ++n) {
    const auto s = build_f_n(algebra, n);
    CHECK(s.all_checks_pass());
    CHECK(extract_g_n(s).regular == is_regular(algebra.semigroup(), n));
  }
}

TEST_CASE("termination cap") {
  const auto algebra = general_3_4();
  try {
    build_f_n(algebra, 1, 1);
    FAIL("expected NonTermination");
  } catch (const NashError& e) {
    CHECK(e.code() == ErrorCode::NonTermination);
  }
  CHECK_THROWS_AS(build_f_n(algebra, 1, 0), NashError);
  CHECK(default_j_max(algebra.semigroup(), 1) == 2 * 6 + 3);
}

TEST_CASE("symbolic power membership") {
  const auto cusp = CurveAlgebra::monomial(NumericalSemigroup::from_generators({2, 3}));
  const auto x = BivariatePoly::x(Q), y = BivariatePoly::y(Q);
  CHECK_FALSE(symbolic_power_membership((x + y) * (x + y), 1, cusp));
  CHECK(symbolic_power_membership(x * x - y * y, 0, cusp));
  CHECK_FALSE(symbolic_power_membership(x * x, 1, cusp));
  CHECK_THROWS_AS(symbolic_power_membership(x, -1, cusp), NashError);
}

TEST_CASE("length of R/a_n") {
  CHECK(a_n_length_check(NumericalSemigroup::from_generators({5, 7}), 3) == 4);
  for (const auto& g : kCatalog) {
    const auto s = NumericalSemigroup::from_generators(g);
    for (long n = 0; n <= 50; ++n) CHECK(a_n_length_check(s, n) == n + 1);
  }
  CHECK(a_n_length_check(NumericalSemigroup::from_generators({1}), 7) == 8);
}

TEST_CASE("random semigroups: construction verdict equals the criterion") {
  testgen::Gen gen(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto algebra = CurveAlgebra::monomial(NumericalSemigroup::from_generators(gen.semigroup_generators(9)));
    const long stab = stabilization_index(algebra.semigroup());
    for (long n = 0; n <= std::min(stab + 2, 10L); ++n) {
      const auto st = build_f_n(algebra, n);
      CHECK(st.all_checks_pass());
      CHECK(extract_g_n(st).regular == is_regular(algebra.semigroup(), n));
    }
  }
}
