#include "nashblow/algebra.hpp"

#include <deque>
#include <string>

namespace nashblow {

namespace {

// Subtracts c * h from the coefficient map m.
void subtract_multiple(std::map<long, Coefficient>& m, const Coefficient& c, const TruncatedSeries& h) {
  for (const auto& [d, v] : h.coeffs()) {
    auto [it, inserted] = m.try_emplace(d, -(c * v));
    if (!inserted) {
      it->second -= c * v;
      if (it->second.is_zero()) m.erase(it);
    }
  }
}

TruncatedSeries from_map(Field f, long trunc, const std::map<long, Coefficient>& m) {
  TruncatedSeries s(f, trunc);
  for (const auto& [d, c] : m) s.set(d, c);
  return s;
}

}  // namespace

EchelonBasis::EchelonBasis(NumericalSemigroup semigroup, Field field, std::map<long, TruncatedSeries> low)
    : semigroup_(std::move(semigroup)), field_(field), low_(std::move(low)) {
  const long frob = semigroup_.frobenius_number();
  for (const auto& [i, h] : low_) {
    if (!semigroup_.contains(i) || i > frob) fail(ErrorCode::Internal, "basis element outside S below the conductor");
    if (h.order() != i || !h.coeff(i).is_one()) fail(ErrorCode::Internal, "basis element not monic of its order");
    for (const auto& [d, c] : h.coeffs()) {
      if (d > i && semigroup_.contains(d)) {
        fail(ErrorCode::Internal, "basis element h_" + std::to_string(i) + " has a tail term in S");
      }
    }
  }
  for (long i : semigroup_.elements_up_to(frob)) {
    if (!low_.contains(i)) fail(ErrorCode::Internal, "missing basis element h_" + std::to_string(i));
  }
}

EchelonBasis EchelonBasis::monomial(const NumericalSemigroup& semigroup, Field field) {
  std::map<long, TruncatedSeries> low;
  for (long i : semigroup.elements_up_to(semigroup.frobenius_number())) {
    low.emplace(i, TruncatedSeries::monomial(field, i, Coefficient::one(field), i));
  }
  return EchelonBasis(semigroup, field, std::move(low));
}

TruncatedSeries EchelonBasis::h(long i) const {
  if (!semigroup_.contains(i)) return TruncatedSeries(field_, std::max(i, 0L));
  if (auto it = low_.find(i); it != low_.end()) return it->second;
  return TruncatedSeries::monomial(field_, i, Coefficient::one(field_), i);
}

Coefficient EchelonBasis::tail(long i, long j) const {
  if (auto it = low_.find(i); it != low_.end()) return it->second.coeff(i + j);
  if (j == 0 && semigroup_.contains(i)) return Coefficient::one(field_);
  return Coefficient::zero(field_);
}

ValueSemigroupResult compute_value_semigroup(const std::vector<TruncatedSeries>& gens, long truncation) {
  if (gens.empty()) fail(ErrorCode::Usage, "algebra needs at least one generator");
  if (truncation < 1) fail(ErrorCode::Usage, "truncation must be positive");
  const Field f = gens.front().field();

  std::vector<TruncatedSeries> work;
  for (const auto& g : gens) {
    if (!(g.field() == f)) fail(ErrorCode::FieldMismatch, "generators over different fields");
    TruncatedSeries t(f, truncation);
    for (const auto& [d, c] : g.coeffs()) {
      if (d > 0) t.set(d, c);  // constants lie in R already
    }
    if (t.is_zero()) fail(ErrorCode::Usage, "generator has no positive-order part below the truncation");
    work.push_back(std::move(t));
  }

  // Row echelon form keyed by leading order, leading coefficient 1.
  std::map<long, TruncatedSeries> pivots;
  auto reduce = [&](TruncatedSeries v) {
    std::map<long, Coefficient> m = v.coeffs();
    while (!m.empty()) {
      auto lead = m.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) break;
      const Coefficient c = lead->second;
      subtract_multiple(m, c, it->second);
    }
    if (!m.empty()) {
      const Coefficient inv = m.begin()->second.inverse();
      for (auto& [d, c] : m) c *= inv;
    }
    return from_map(f, truncation, m);
  };

  std::deque<TruncatedSeries> queue;
  pivots.emplace(0, TruncatedSeries::monomial(f, 0, Coefficient::one(f), truncation));
  queue.push_back(pivots.at(0));
  // Every element ever inserted has its products with the generators reduced
  // into the span, so the final span is closed under multiplication.
  while (!queue.empty()) {
    const TruncatedSeries b = queue.front();
    queue.pop_front();
    for (const auto& g : work) {
      TruncatedSeries r = reduce(b * g);
      if (r.is_zero()) continue;
      const long order = *r.order();
      pivots.emplace(order, r);
      queue.push_back(std::move(r));
    }
  }

  std::vector<long> orders;
  for (const auto& [d, h] : pivots) orders.push_back(d);
  NumericalSemigroup semigroup = NumericalSemigroup::from_elements(orders, truncation);

  // Back-substitution: clear tail terms sitting on S, largest order first so
  // each h_d used is already normalized.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const long i = it->first;
    std::map<long, Coefficient> m = it->second.coeffs();
    for (auto term = m.upper_bound(i); term != m.end();) {
      const long d = term->first;
      if (semigroup.contains(d)) {
        const Coefficient c = term->second;
        subtract_multiple(m, c, pivots.at(d));
        term = m.upper_bound(d);
      } else {
        ++term;
      }
    }
    it->second = from_map(f, truncation, m);
  }

  std::map<long, TruncatedSeries> low;
  const long frob = semigroup.frobenius_number();
  for (const auto& [i, h] : pivots) {
    if (i > frob) break;
    if (h.max_degree() > frob) fail(ErrorCode::Internal, "normalized basis element extends past the Frobenius number");
    low.emplace(i, from_map(f, std::max(i, frob), h.coeffs()));
  }
  EchelonBasis basis(semigroup, f, std::move(low));
  return {std::move(semigroup), std::move(basis)};
}

CurveAlgebra CurveAlgebra::monomial(const NumericalSemigroup& semigroup, Field field) {
  std::vector<TruncatedSeries> gens;
  for (long g : semigroup.generators()) {
    gens.push_back(TruncatedSeries::monomial(field, g, Coefficient::one(field), g));
  }
  return CurveAlgebra(Mode::Monomial, EchelonBasis::monomial(semigroup, field), std::move(gens),
                      2 * semigroup.conductor_number());
}

CurveAlgebra CurveAlgebra::general(const std::vector<TruncatedSeries>& gens, long truncation) {
  auto result = compute_value_semigroup(gens, truncation);
  return CurveAlgebra(Mode::General, std::move(result.basis), gens, truncation);
}

TruncatedSeries CurveAlgebra::reduce(const TruncatedSeries& p) const {
  if (!(p.field() == field())) fail(ErrorCode::FieldMismatch, "series and algebra over different fields");
  const auto& s = semigroup();
  const long frob = s.frobenius_number();
  std::map<long, Coefficient> m = p.coeffs();
  std::map<long, Coefficient> remainder;
  // Subtracting c * h_d only touches d and gaps above d, so a single
  // ascending pass settles each gap coefficient before it is read.
  for (auto term = m.begin(); term != m.end() && term->first <= frob;) {
    const long d = term->first;
    if (s.contains(d)) {
      const Coefficient c = term->second;
      subtract_multiple(m, c, basis_.h(d));
      term = m.upper_bound(d);
    } else {
      remainder.emplace(d, term->second);
      ++term;
    }
  }
  return from_map(field(), std::max(frob, 0L), remainder);
}

}  // namespace nashblow
