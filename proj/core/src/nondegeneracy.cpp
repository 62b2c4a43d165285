#include "polycontact/nondegeneracy.hpp"

#include <map>

#include "polycontact/calculus.hpp"
#include "polycontact/errors.hpp"

namespace polycontact {

RankResult function_field_rank(PolyMatrix rows, const ContextPtr& ctx) {
  RankResult result;
  const std::size_t n = rows.size();
  if (n == 0) return result;
  const std::size_t m = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != m) throw AlgebraError("ragged matrix");
    for (const auto& e : row) {
      for (const auto& [mono, c] : e.terms()) {
        if (mono.has_odd()) throw AlgebraError("function_field_rank: entries must be free of odd generators");
      }
    }
  }

  PolyMatrix combo(n, std::vector<SuperPoly>(n, SuperPoly(ctx)));
  for (std::size_t i = 0; i < n; ++i) combo[i][i] = SuperPoly(ctx, 1);

  std::vector<bool> pivoted(n, false);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (pivoted[i] || rows[i][col].is_zero()) continue;
      if (pivot == n || rows[i][col].size() < rows[pivot][col].size()) pivot = i;
    }
    if (pivot == n) continue;
    pivoted[pivot] = true;
    ++result.rank;

    SuperPoly p = rows[pivot][col];
    if (p.is_unit_monomial()) {
      SuperPoly inv = p.inverse_unit();
      for (auto& e : rows[pivot]) e = inv * e;
      for (auto& e : combo[pivot]) e = inv * e;
      p = SuperPoly(ctx, 1);
    }
    const bool unit_pivot = p == SuperPoly(ctx, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (pivoted[i] || rows[i][col].is_zero()) continue;
      SuperPoly e = rows[i][col];
      for (std::size_t k = 0; k < m; ++k) {
        SuperPoly scaled = unit_pivot ? rows[i][k] : p * rows[i][k];
        rows[i][k] = scaled - e * rows[pivot][k];
      }
      for (std::size_t k = 0; k < n; ++k) {
        SuperPoly scaled = unit_pivot ? combo[i][k] : p * combo[i][k];
        combo[i][k] = scaled - e * combo[pivot][k];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!pivoted[i]) {
      result.kernel_vector = combo[i];
      break;
    }
  }
  return result;
}

namespace {

// Splits a polynomial into fibre monomials with body coefficients.
void collect_body(const Chart& chart, const SuperPoly& poly, std::size_t leg,
                  std::map<std::pair<Monomial, std::size_t>, SuperPoly>& out) {
  const ContextPtr& ctx = chart.context();
  OddMask fiber_odd = 0;
  for (GenIndex g : chart.fiber_generators()) {
    if (is_odd((*ctx)[g].parity)) fiber_odd |= OddMask{1} << ctx->odd_rank(g);
  }
  for (const auto& [m, c] : poly.terms()) {
    if (m.odd_mask() & ~fiber_odd) continue;  // killed by the body map
    std::vector<Monomial::Power> fiber_powers;
    std::vector<Monomial::Power> other_powers;
    for (const auto& p : m.powers()) (chart.is_fiber(p.first) ? fiber_powers : other_powers).push_back(p);
    Monomial fiber = Monomial::from_mask(m.odd_mask()).with_commuting(std::move(fiber_powers), {});
    Monomial coeff = Monomial{}.with_commuting(std::move(other_powers), m.exps());
    auto key = std::pair{std::move(fiber), leg};
    auto it = out.try_emplace(key, SuperPoly(ctx)).first;
    it->second.add_term(coeff, c);
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

ContractionMatrix contraction_body_matrix(const VectorValuedForm& form, std::span<const VectorField> basis) {
  const Chart& chart = form.chart();
  std::vector<std::map<std::pair<Monomial, std::size_t>, SuperPoly>> row_maps;
  std::map<std::pair<Monomial, std::size_t>, std::size_t> column_index;
  for (const auto& b : basis) {
    VectorValuedForm contracted = interior_product(b, form);
    auto& entries = row_maps.emplace_back();
    for (std::size_t leg = 0; leg < chart.dim(); ++leg) collect_body(chart, contracted[leg], leg, entries);
    for (const auto& [key, v] : entries) column_index.try_emplace(key, 0);
  }
  ContractionMatrix out;
  std::size_t next = 0;
  for (auto& [key, idx] : column_index) {
    idx = next++;
    out.columns.push_back(key);
  }
  for (const auto& entries : row_maps) {
    std::vector<SuperPoly> row(out.columns.size(), chart.zero());
    for (const auto& [key, v] : entries) row[column_index.at(key)] = v;
    out.rows.push_back(std::move(row));
  }
  return out;
}

NondegeneracyResult nondegeneracy_check(const VectorValuedForm& form, std::span<const VectorField> basis) {
  for (const auto& b : basis) require_same_chart(b.chart(), form.chart(), "nondegeneracy_check");
  ContractionMatrix matrix = contraction_body_matrix(form, basis);
  NondegeneracyResult result;
  result.columns = matrix.columns.size();
  RankResult rank = function_field_rank(std::move(matrix.rows), form.chart().context());
  result.rank = rank.rank;
  result.nondegenerate = rank.rank == basis.size();
  if (!result.nondegenerate) result.witness = std::move(rank.kernel_vector);
  return result;
}

NondegeneracyResult nondegeneracy_check(const Chart& chart, const SuperPoly& form, std::span<const VectorField> basis) {
  auto p = form.parity();
  if (!p) throw ParityError("nondegeneracy_check: inhomogeneous form");
  // A scalar form is carried on the first leg, which must be even so the parity tracks.
  std::size_t leg = 0;
  while (leg < chart.dim() && is_odd(chart.slot_parity(leg))) ++leg;
  if (leg == chart.dim()) throw AlgebraError("nondegeneracy_check: chart has no even coordinate");
  std::vector<SuperPoly> comps(chart.dim(), chart.zero());
  comps[leg] = form;
  return nondegeneracy_check(VectorValuedForm(chart, std::move(comps), *p), basis);
}

}  // namespace polycontact
