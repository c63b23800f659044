#include "nashblow/construction.hpp"

#include <algorithm>
#include <string>

#include "nashblow/binom_matrix.hpp"

namespace nashblow {

IndexSets index_sets(const NumericalSemigroup& s, long n, long j) {
  if (n < 0 || j < 0) fail(ErrorCode::Usage, "index_sets requires n >= 0 and j >= 0");
  const long s_n = s.nth_element(n);
  const long l_n = s.l_n(n);
  IndexSets out;
  for (long t : s.gaps()) {
    if (j == 0 ? t < s_n : t <= s_n + j) out.t_set.push_back(t);
  }
  if (j == 0) {
    out.m = 0;
    out.s_set = {s_n};
  } else {
    out.m = l_n + j - static_cast<long>(out.t_set.size());
    if (out.m < 0) fail(ErrorCode::Internal, "m_{n,j} is negative");
    for (long k = 0; k <= out.m; ++k) out.s_set.push_back(s.nth_element(k));
  }
  std::merge(out.t_set.begin(), out.t_set.end(), out.s_set.begin(), out.s_set.end(),
             std::back_inserter(out.u_set));
  if (static_cast<long>(out.u_set.size()) != l_n + j + 1) {
    fail(ErrorCode::Internal, "index set u has the wrong size");
  }
  return out;
}

BivariatePoly prescribed_multiple(long n, long degree, const std::vector<long>& positions,
                                  const std::vector<Coefficient>& values, Field field) {
  const long cofactor_degree = degree - (n + 1);
  if (cofactor_degree < 0 || static_cast<long>(positions.size()) != cofactor_degree + 1 ||
      positions.size() != values.size()) {
    fail(ErrorCode::Usage, "prescribed_multiple: inconsistent degree and positions");
  }
  if (std::all_of(values.begin(), values.end(), [](const Coefficient& c) { return c.is_zero(); })) {
    return BivariatePoly(field);
  }
  // Coefficient of x^p in q * (x+y)^{n+1}, with q = sum_c r_c x^c y^{L-c},
  // is sum_c C(n+1, p - c) r_c: the system matrix is M(n+1; positions).
  const ExactMatrix m = build_matrix(n + 1, IndexSet(positions), field);
  const auto r = solve_linear(m, values);
  BivariatePoly q(field);
  for (long c = 0; c <= cofactor_degree; ++c) q.add_to(c, cofactor_degree - c, r[c]);
  BivariatePoly f = q * BivariatePoly::binomial_power(field, n + 1);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (!(f.coeff(positions[k], degree - positions[k]) == values[k])) {
      fail(ErrorCode::Internal, "prescribed coefficient not reproduced");
    }
  }
  return f;
}

BivariatePoly build_f_n0(const NumericalSemigroup& s, long n, Field field) {
  const long s_n = s.nth_element(n);
  const IndexSets sets = index_sets(s, n, 0);
  std::vector<Coefficient> values(sets.u_set.size(), Coefficient::zero(field));
  values.back() = Coefficient::one(field);  // position s_n is the largest
  return prescribed_multiple(n, s_n, sets.u_set, values, field);
}

long default_j_max(const NumericalSemigroup& s, long n) {
  return 2 * (s.frobenius_number() + 1) + n + 2;
}

Coefficient ConstructionState::c(long i, long j) const {
  if (i < 0 || j < 0 || j >= static_cast<long>(parts.size())) return Coefficient::zero(f_n.field());
  const long y_exp = s_n + j - i;
  if (y_exp < 0) return Coefficient::zero(f_n.field());
  return parts[j].coeff(i, y_exp);
}

bool symbolic_power_membership(const BivariatePoly& f, long n, const CurveAlgebra& algebra) {
  if (n < 0) fail(ErrorCode::Usage, "n must be non-negative");
  if (!divide_by_binomial_power(f, n + 1)) return false;
  for (long k = 0; k <= f.max_y_degree(); ++k) {
    if (!algebra.contains(f.y_slice(k))) return false;
  }
  return true;
}

ConstructionState build_f_n(const CurveAlgebra& algebra, long n, std::optional<long> j_max) {
  if (n < 0) fail(ErrorCode::Usage, "n must be non-negative");
  const Field field = algebra.field();
  const NumericalSemigroup& s = algebra.semigroup();
  const EchelonBasis& basis = algebra.basis();
  const long frob = s.frobenius_number();

  ConstructionState st{.n = n,
                       .s_n = s.nth_element(n),
                       .l_n = s.l_n(n),
                       .j_max = j_max.value_or(default_j_max(s, n)),
                       .terminated_at = 0,
                       .parts = {},
                       .f_n = BivariatePoly(field)};
  if (st.j_max < 1) fail(ErrorCode::Usage, "j_max must be at least 1");

  st.parts.push_back(build_f_n0(s, n, field));

  // Positions of S strictly between 0 and t_l: the only c-values that feed
  // the gap recurrence (h_0 = 1 has no tail and gaps have h = 0).
  std::vector<long> feeding;
  for (long i = 1; i < frob; ++i) {
    if (s.contains(i)) feeding.push_back(i);
  }
  auto quiet = [&](long j) {
    if (j < 0) return true;
    return std::all_of(feeding.begin(), feeding.end(), [&](long i) { return st.c(i, j).is_zero(); });
  };

  bool terminated = false;
  for (long j = 1; j <= st.j_max; ++j) {
    const IndexSets sets = index_sets(s, n, j);
    std::vector<Coefficient> values;
    values.reserve(sets.u_set.size());
    for (long i : sets.u_set) {
      Coefficient v = Coefficient::zero(field);
      if (!s.contains(i)) {
        for (long a = 1; a <= j && a <= i; ++a) {
          const Coefficient h = basis.tail(i - a, a);
          if (h.is_zero()) continue;
          const Coefficient prev = st.c(i - a, j - a);
          if (!prev.is_zero()) v += prev * h;
        }
      }
      values.push_back(std::move(v));
    }
    st.parts.push_back(prescribed_multiple(n, st.s_n + j, sets.u_set, values, field));

    // Zero tail: f_{n,j} = 0 and the previous t_l parts are quiet on the
    // feeding positions, so every later gap value vanishes and uniqueness
    // forces every later part to vanish.
    if (st.parts.back().is_zero()) {
      bool window_quiet = true;
      for (long w = j - std::max(frob, 0L) + 1; w <= j && window_quiet; ++w) window_quiet = quiet(w);
      if (window_quiet) {
        st.terminated_at = j;
        terminated = true;
        break;
      }
    }
  }
  if (!terminated) {
    fail(ErrorCode::NonTermination, "f_{n,j} recurrence for n = " + std::to_string(n) +
                                        " found no zero tail within j_max = " + std::to_string(st.j_max));
  }

  for (const auto& part : st.parts) st.f_n += part;

  const BivariatePoly& f0 = st.parts.front();
  st.base_pattern_ok = f0.coeff(st.s_n, 0).is_one();
  for (long t : s.gaps()) {
    if (t < st.s_n && !f0.coeff(t, st.s_n - t).is_zero()) st.base_pattern_ok = false;
  }
  st.divisible = divide_by_binomial_power(st.f_n, n + 1).has_value();
  st.in_r_y = true;
  for (long k = 0; k <= st.f_n.max_y_degree() && st.in_r_y; ++k) {
    st.in_r_y = algebra.contains(st.f_n.y_slice(k));
  }
  const TruncatedSeries axis = substitute_y_zero(st.f_n);
  st.x_axis_ok = axis.order() == st.s_n && axis.coeff(st.s_n).is_one() && algebra.contains(axis);
  if (algebra.mode() == CurveAlgebra::Mode::Monomial) {
    for (const auto& [d, c] : axis.coeffs()) {
      if (!s.contains(d)) st.x_axis_ok = false;
    }
  }
  return st;
}

DeformationCertificate extract_g_n(const ConstructionState& state) {
  DeformationCertificate cert{.n = state.n,
                              .s_n = state.s_n,
                              .f_n = state.f_n,
                              .g_n = y_linear_coefficient(state.f_n),
                              .ord_g_n = std::nullopt,
                              .regular = false};
  cert.ord_g_n = cert.g_n.order();
  if (cert.ord_g_n && *cert.ord_g_n < state.s_n - 1) {
    fail(ErrorCode::Internal, "g_n has order below s_n - 1");
  }
  cert.regular = cert.ord_g_n == state.s_n - 1;
  return cert;
}

long a_n_length_check(const NumericalSemigroup& s, long n) {
  if (n < 0) fail(ErrorCode::Usage, "n must be non-negative");
  const long s_n = s.nth_element(n);
  const long length = static_cast<long>(s.elements_up_to(s_n - 1).size());
  if (length != n + 1) fail(ErrorCode::Internal, "length R/a_n differs from n + 1");
  return length;
}

}  // namespace nashblow
