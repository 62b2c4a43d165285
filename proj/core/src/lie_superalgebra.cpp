#include "polycontact/lie_superalgebra.hpp"

#include "polycontact/calculus.hpp"
#include "polycontact/errors.hpp"
#include "polycontact/linear_system.hpp"

namespace polycontact {

LieSuperalgebra::LieSuperalgebra(std::vector<std::string> names, std::vector<Parity> parities,
                                 std::vector<std::vector<std::vector<GaussianRational>>> constants)
    : names_(std::move(names)), parities_(std::move(parities)), constants_(std::move(constants)) {
  const std::size_t n = names_.size();
  if (parities_.size() != n || constants_.size() != n) throw AlgebraError("LieSuperalgebra: inconsistent sizes");
  for (const auto& row : constants_) {
    if (row.size() != n) throw AlgebraError("LieSuperalgebra: inconsistent sizes");
    for (const auto& c : row) {
      if (c.size() != n) throw AlgebraError("LieSuperalgebra: inconsistent sizes");
    }
  }
}

LieSuperalgebra LieSuperalgebra::from_realization(std::vector<std::string> names, const std::vector<VectorField>& fields) {
  const std::size_t n = fields.size();
  if (names.size() != n || n == 0) throw AlgebraError("from_realization: need one name per field");
  const Chart& chart = fields.front().chart();
  std::vector<Parity> parities;
  for (const auto& f : fields) parities.push_back(f.parity());

  // Equation rows are indexed by (leg, monomial); unknown k multiplies fields[k].
  auto solve_for = [&](const VectorField& target) {
    std::map<std::pair<std::size_t, Monomial>, std::pair<SparseRow, GaussianRational>> rows;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t leg = 0; leg < chart.dim(); ++leg) {
        for (const auto& [m, c] : fields[k][leg].terms()) rows[{leg, m}].first[k] = c;
      }
    }
    for (std::size_t leg = 0; leg < chart.dim(); ++leg) {
      for (const auto& [m, c] : target[leg].terms()) rows[{leg, m}].second = c;
    }
    LinearSystem sys(n);
    for (const auto& [key, eq] : rows) sys.add_equation(eq.first, eq.second);
    LinearSolution sol = sys.solve();
    if (!sol.consistent) throw AlgebraError("from_realization: bracket leaves the span of the realisation");
    if (!sol.nullspace.empty()) throw AlgebraError("from_realization: realisation is not faithful");
    return sol.particular;
  };

  std::vector<std::vector<std::vector<GaussianRational>>> constants(n, std::vector<std::vector<GaussianRational>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) constants[i][j] = solve_for(graded_commutator(fields[i], fields[j]));
  }
  return {std::move(names), std::move(parities), std::move(constants)};
}

bool AlgebraValued::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool operator==(const AlgebraValued& a, const AlgebraValued& b) {
  return a.algebra == b.algebra && a.coeffs == b.coeffs;
}

AlgebraValued algebra_zero(const LieSuperalgebra& g, const ContextPtr& ctx) {
  return {&g, std::vector<SuperPoly>(g.dim(), SuperPoly(ctx))};
}

AlgebraValued operator+(const AlgebraValued& a, const AlgebraValued& b) {
  if (a.algebra != b.algebra) throw AlgebraError("adding elements of different algebras");
  AlgebraValued out = a;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
  return out;
}

AlgebraValued operator*(const GaussianRational& c, const AlgebraValued& a) {
  AlgebraValued out = a;
  for (auto& f : out.coeffs) f *= c;
  return out;
}

AlgebraValued bracket(const AlgebraValued& a, const AlgebraValued& b) {
  if (a.algebra != b.algebra) throw AlgebraError("bracket of elements of different algebras");
  const LieSuperalgebra& g = *a.algebra;
  AlgebraValued out = algebra_zero(g, a.coeffs.front().context());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      const auto& c = g.bracket(i, j);
      bool any = false;
      for (const auto& x : c) any = any || !x.is_zero();
      if (!any) continue;
      // Moving T_i past the coefficient of b costs a sign per odd term.
      SuperPoly moved = b.coeffs[j];
      if (is_odd(g.parity(i))) {
        moved = SuperPoly(b.coeffs[j].context());
        for (const auto& [m, coeff] : b.coeffs[j].terms()) moved.add_term(m, is_odd(m.parity()) ? -coeff : coeff);
      }
      SuperPoly fg = a.coeffs[i] * moved;
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (!c[k].is_zero()) out.coeffs[k] += c[k] * fg;
      }
    }
  }
  return out;
}

AlgebraValued exterior_derivative(const Chart& chart, const AlgebraValued& a) {
  AlgebraValued out = a;
  for (auto& f : out.coeffs) f = exterior_derivative(chart, f);
  return out;
}

HadamardSeries left_maurer_cartan(const Chart& chart, const AlgebraValued& a, int depth_cap) {
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    auto p = a.coeffs[k].parity();
    if (!a.coeffs[k].is_zero() && (!p || *p != a.algebra->parity(k))) {
      throw ParityError("left_maurer_cartan: A must be even");
    }
  }
  HadamardSeries out;
  out.sum = algebra_zero(*a.algebra, chart.context());
  AlgebraValued term = exterior_derivative(chart, a);
  GaussianRational factorial = 1;  // (n+1)!
  for (int n = 0; n <= depth_cap; ++n) {
    out.ad_powers.push_back(term);
    if (term.is_zero()) {
      out.terminated = true;
      return out;
    }
    factorial *= GaussianRational(n + 1);
    GaussianRational weight = (n % 2 == 0 ? GaussianRational(1) : GaussianRational(-1)) / factorial;
    out.sum = out.sum + weight * term;
    term = bracket(a, term);
  }
  throw AlgebraError("left_maurer_cartan: series did not terminate within depth " + std::to_string(depth_cap));
}

}  // namespace polycontact
