#pragma once

#include <span>
#include <utility>
#include <vector>

#include "polycontact/chart.hpp"
#include "polycontact/monomial.hpp"
#include "polycontact/super_poly.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

using PolyMatrix = std::vector<std::vector<SuperPoly>>;

struct RankResult {
  std::size_t rank = 0;
  /// Coefficients v with sum_i v_i row_i = 0; empty when the rows are independent.
  /// The first dependent row (in row order) determines the witness.
  std::vector<SuperPoly> kernel_vector;
};

/// Row rank over the fraction field of a commutative coefficient ring (the entries must
/// carry no odd generators). Fraction-free elimination; unit monomial pivots (exp atoms,
/// invertible generators) are normalised away.
RankResult function_field_rank(PolyMatrix rows, const ContextPtr& ctx);

/// Body of the contraction matrix: row b lists the coefficients of i_{basis[b]} Omega in
/// the (fibre monomial x leg) basis, with every odd non-fibre generator set to zero.
struct ContractionMatrix {
  std::vector<std::pair<Monomial, std::size_t>> columns;
  PolyMatrix rows;
};

ContractionMatrix contraction_body_matrix(const VectorValuedForm& form, std::span<const VectorField> basis);

struct NondegeneracyResult {
  bool nondegenerate = false;
  std::size_t rank = 0;
  std::size_t columns = 0;
  /// Coefficients of a vanishing combination of the basis fields (empty on success).
  std::vector<SuperPoly> witness;
};

/// i_X Omega = 0 forces X = 0 on span(basis) iff the body of the contraction matrix has
/// full row rank.
NondegeneracyResult nondegeneracy_check(const VectorValuedForm& form, std::span<const VectorField> basis);
/// Scalar pseudoform, treated as a single leg.
NondegeneracyResult nondegeneracy_check(const Chart& chart, const SuperPoly& form, std::span<const VectorField> basis);

}  // namespace polycontact
