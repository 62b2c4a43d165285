#include "polycontact/linear_system.hpp"

#include <stdexcept>

namespace polycontact {

namespace {

void axpy(SparseRow& row, const GaussianRational& factor, const SparseRow& other) {
  for (const auto& [col, v] : other) {
    auto [it, inserted] = row.try_emplace(col, factor * v);
    if (!inserted) {
      it->second += factor * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

void LinearSystem::add_equation(const SparseRow& coefficients, const GaussianRational& rhs) {
  ++equations_;
  SparseRow row;
  for (const auto& [col, v] : coefficients) {
    if (col >= unknowns_) throw std::out_of_range("equation refers to an unknown out of range");
    if (!v.is_zero()) row.emplace(col, v);
  }
  if (!rhs.is_zero()) row.emplace(unknowns_, rhs);

  // Forward elimination against the existing echelon rows.
  while (!row.empty()) {
    auto lead = row.begin();
    if (lead->first == unknowns_) {
      inconsistent_ = true;
      return;
    }
    auto pivot = pivots_.find(lead->first);
    if (pivot == pivots_.end()) {
      const std::size_t pcol = lead->first;
      GaussianRational scale = lead->second.inverse();
      for (auto& [col, v] : row) v *= scale;
      pivots_.emplace(pcol, std::move(row));
      return;
    }
    GaussianRational factor = -lead->second;
    axpy(row, factor, pivot->second);
  }
}

LinearSolution LinearSystem::solve() const {
  LinearSolution sol;
  sol.consistent = !inconsistent_;
  sol.rank = pivots_.size();
  sol.particular.assign(unknowns_, GaussianRational{});

  // Back substitution to reduced row echelon form.
  std::map<std::size_t, SparseRow> reduced = pivots_;
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    const std::size_t pcol = it->first;
    const SparseRow& prow = it->second;
    for (auto other = reduced.begin(); other != reduced.end() && other->first < pcol; ++other) {
      auto hit = other->second.find(pcol);
      if (hit == other->second.end()) continue;
      GaussianRational factor = -hit->second;
      axpy(other->second, factor, prow);
    }
  }

  std::vector<bool> is_pivot(unknowns_, false);
  for (const auto& [pcol, row] : reduced) {
    is_pivot[pcol] = true;
    auto rhs = row.find(unknowns_);
    if (rhs != row.end()) sol.particular[pcol] = rhs->second;
  }
  // Column -> (pivot column, coefficient) for entries in free columns.
  std::map<std::size_t, std::vector<std::pair<std::size_t, GaussianRational>>> by_free;
  for (const auto& [pcol, row] : reduced) {
    for (const auto& [col, v] : row) {
      if (col != pcol && col < unknowns_) by_free[col].emplace_back(pcol, v);
    }
  }
  for (std::size_t col = 0; col < unknowns_; ++col) {
    if (is_pivot[col]) continue;
    SparseRow basis;
    basis.emplace(col, GaussianRational(1));
    if (auto it = by_free.find(col); it != by_free.end()) {
      for (const auto& [pcol, v] : it->second) basis.emplace(pcol, -v);
    }
    sol.nullspace.push_back(std::move(basis));
  }
  return sol;
}

}  // namespace polycontact
