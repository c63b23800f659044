#include "nashblow/oracle.hpp"

#include <string>
#include <vector>

#include "nashblow/construction.hpp"
#include "nashblow/sparse_elim.hpp"

namespace nashblow {

namespace {

// Unknowns are the coefficients of q, indexed by total degree then x-degree,
// so that rows of a monomial algebra stay inside one degree block.
class CofactorSpace {
 public:
  CofactorSpace(Field field, long n, long max_cofactor_degree)
      : field_(field), n_(n), max_degree_(max_cofactor_degree) {
    for (long a = 0; a <= n + 1; ++a) binom_.push_back(Coefficient::from_int(field, binomial(n + 1, a)));
  }

  long size() const { return (max_degree_ + 1) * (max_degree_ + 2) / 2; }

  static long column(long a, long b) {
    const long d = a + b;
    return d * (d + 1) / 2 + a;
  }

  static std::pair<long, long> monomial(long col) {
    long d = 0;
    while ((d + 1) * (d + 2) / 2 <= col) ++d;
    const long a = col - d * (d + 1) / 2;
    return {a, d - a};
  }

  // Linear form giving the coefficient of x^i y^k in q (x+y)^{n+1}.
  SparseRow coefficient_form(long i, long k) const {
    SparseRow row;
    const long dq = i + k - (n_ + 1);
    if (dq < 0 || dq > max_degree_) return row;
    for (long alpha = 0; alpha <= n_ + 1; ++alpha) {
      const long a = i - alpha;
      const long b = k - (n_ + 1 - alpha);
      if (a >= 0 && b >= 0) row.emplace(column(a, b), binom_[alpha]);
    }
    return row;
  }

  BivariatePoly multiple(const SparseRow& q_coeffs) const {
    BivariatePoly q(field_);
    for (const auto& [col, c] : q_coeffs) {
      const auto [a, b] = monomial(col);
      q.add_to(a, b, c);
    }
    return q * BivariatePoly::binomial_power(field_, n_ + 1);
  }

 private:
  Field field_;
  long n_;
  long max_degree_;
  std::vector<Coefficient> binom_;
};

void add_scaled(SparseRow& acc, const SparseRow& row, const Coefficient& c) {
  for (const auto& [col, v] : row) {
    auto [it, inserted] = acc.try_emplace(col, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

}  // namespace

long oracle_min_degree(const NumericalSemigroup& s, long n) {
  return s.frobenius_number() + s.nth_element(n) + 2;
}

long oracle_default_degree(const NumericalSemigroup& s, long n) {
  return s.frobenius_number() + s.nth_element(n) + n + 4;
}

OracleResult deformation_oracle(const CurveAlgebra& algebra, long n, long degree) {
  if (n < 0) fail(ErrorCode::Usage, "n must be non-negative");
  const NumericalSemigroup& s = algebra.semigroup();
  if (degree < oracle_min_degree(s, n)) {
    fail(ErrorCode::Usage, "degree bound " + std::to_string(degree) + " is below t_l + s_n + 2 = " +
                               std::to_string(oracle_min_degree(s, n)));
  }
  const Field field = algebra.field();

  OracleResult res;
  res.n = n;
  res.s_n = s.nth_element(n);
  res.degree_bound = degree;
  res.hypothesis_holds = !s.is_full();

  const CofactorSpace space(field, n, degree - n - 1);
  res.unknowns = space.size();

  // A polynomial p lies in R iff its reduction against the echelon basis
  // vanishes. The reduction is linear, so tabulate it on x^i for i <= t_l:
  // membership_terms[t] lists (i, coefficient of x^t in reduce(x^i)).
  const long frob = s.frobenius_number();
  std::map<long, std::vector<std::pair<long, Coefficient>>> membership_terms;
  for (long i = 0; i <= frob; ++i) {
    const auto rem = algebra.reduce(TruncatedSeries::monomial(field, i, Coefficient::one(field), frob));
    for (const auto& [t, c] : rem.coeffs()) membership_terms[t].emplace_back(i, c);
  }

  SparseEchelon echelon(field);
  for (long k = 0; k <= degree; ++k) {
    for (const auto& [t, terms] : membership_terms) {
      SparseRow row;
      for (const auto& [i, c] : terms) add_scaled(row, space.coefficient_form(i, k), c);
      if (row.empty()) continue;
      ++res.constraints;
      echelon.add(std::move(row));
    }
  }
  res.rank = static_cast<long>(echelon.rank());
  res.basis_dimension = res.unknowns - res.rank;

  // A linear form vanishes on V_D iff it lies in the row space.
  for (long i = 0; i <= res.s_n; ++i) {
    if (!echelon.reduce(space.coefficient_form(i, 0)).empty()) {
      res.a_n_order = i;
      break;
    }
  }

  for (long i = 0; i < res.s_n; ++i) {
    const SparseRow residual = echelon.reduce(space.coefficient_form(i, 1));
    if (residual.empty()) continue;
    // The kernel vector for a free column in the residual pairs with the form
    // to that residual entry, which is nonzero.
    const BivariatePoly g = space.multiple(echelon.kernel_vector(residual.begin()->first));
    const auto g1_order = y_linear_coefficient(g).order();
    if (!symbolic_power_membership(g, n, algebra) || g.total_degree() > degree || g1_order != i) {
      fail(ErrorCode::Internal, "oracle witness failed verification");
    }
    res.regular = true;
    res.witness = g;
    res.witness_g1_order = g1_order;
    break;
  }
  return res;
}

CalibratedOracle deformation_oracle_calibrated(const CurveAlgebra& algebra, long n, std::optional<long> degree) {
  const long d = degree.value_or(oracle_default_degree(algebra.semigroup(), n));
  CalibratedOracle out{deformation_oracle(algebra, n, d), deformation_oracle(algebra, n, d + 4)};
  if (out.primary.regular != out.enlarged.regular) {
    fail(ErrorCode::DegreeTooSmall, "oracle verdict for n = " + std::to_string(n) + " changed between D = " +
                                        std::to_string(d) + " and D = " + std::to_string(d + 4));
  }
  return out;
}

}  // namespace nashblow
