#include "polycontact/ansatz.hpp"

#include "polycontact/errors.hpp"

namespace polycontact {

FieldAnsatz::FieldAnsatz(const Chart& chart, int max_even_degree) : chart_(chart) {
  if (max_even_degree < 0) throw AlgebraError("FieldAnsatz: negative degree bound");
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;
  for (std::size_t s = 0; s < chart.dim(); ++s) (is_odd(chart.slot_parity(s)) ? odd : even).push_back(s);

  // Even monomials by increasing degree.
  std::vector<SuperPoly> even_monos{chart.constant(1)};
  std::vector<std::size_t> last_var{0};
  std::size_t begin = 0;
  for (int deg = 1; deg <= max_even_degree; ++deg) {
    std::size_t end = even_monos.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t v = last_var[i]; v < even.size(); ++v) {
        even_monos.push_back(even_monos[i] * chart.coordinate(even[v]));
        last_var.push_back(v);
      }
    }
    begin = end;
  }

  for (std::size_t mask = 0; mask < (std::size_t{1} << odd.size()); ++mask) {
    SuperPoly odd_part = chart.constant(1);
    for (std::size_t b = 0; b < odd.size(); ++b) {
      if (mask & (std::size_t{1} << b)) odd_part = odd_part * chart.coordinate(odd[b]);
    }
    for (const auto& e : even_monos) monomials_.push_back(e * odd_part);
  }

  for (const auto& m : monomials_) {
    const Parity mp = *m.parity();
    for (std::size_t leg = 0; leg < chart.dim(); ++leg) {
      std::vector<SuperPoly> comps(chart.dim(), chart.zero());
      comps[leg] = m;
      fields_.emplace_back(chart, std::move(comps), mp + chart.slot_parity(leg));
    }
  }
}

std::pair<VectorField, VectorField> FieldAnsatz::assemble(const SparseRow& coeffs) const {
  VectorField even(chart_, Parity::even);
  VectorField odd(chart_, Parity::odd);
  for (const auto& [k, c] : coeffs) {
    if (k >= fields_.size()) throw AlgebraError("FieldAnsatz::assemble: unknown out of range");
    if (c.is_zero()) continue;
    VectorField term = c * fields_[k];
    (is_odd(term.parity()) ? odd : even) += term;
  }
  return {std::move(even), std::move(odd)};
}

void ImageSystem::add_image(std::size_t unknown, std::span<const SuperPoly> image) {
  if (unknown >= unknowns_) throw AlgebraError("ImageSystem: unknown out of range");
  for (std::size_t slot = 0; slot < image.size(); ++slot) {
    for (const auto& [m, c] : image[slot].terms()) rows_[{slot, m}][unknown] += c;
  }
}

LinearSolution ImageSystem::solve() const {
  LinearSystem sys(unknowns_);
  for (const auto& [key, row] : rows_) {
    SparseRow clean;
    for (const auto& [k, c] : row) {
      if (!c.is_zero()) clean.emplace(k, c);
    }
    if (!clean.empty()) sys.add_equation(clean);
  }
  return sys.solve();
}

}  // namespace polycontact
