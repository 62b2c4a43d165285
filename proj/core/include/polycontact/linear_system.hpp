#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "polycontact/gaussian_rational.hpp"

namespace polycontact {

using SparseRow = std::map<std::size_t, GaussianRational>;

struct LinearSolution {
  bool consistent = true;
  std::size_t rank = 0;
  /// Values of a particular solution (free variables set to zero).
  std::vector<GaussianRational> particular;
  /// One basis vector per free column, in increasing column order.
  std::vector<SparseRow> nullspace;
};

/// Exact sparse linear system A x = b over Q(i), solved by Gauss-Jordan elimination.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return equations_; }

  void add_equation(const SparseRow& coefficients, const GaussianRational& rhs = {});
  LinearSolution solve() const;

 private:
  std::size_t unknowns_;
  std::size_t equations_ = 0;
  bool inconsistent_ = false;
  // Echelon rows keyed by pivot column; the rhs lives at column `unknowns_`.
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace polycontact
