#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "polycontact/chart.hpp"
#include "polycontact/linear_system.hpp"
#include "polycontact/monomial.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

/// General vector field with unknown constant coefficients: one unknown per
/// (base monomial, leg). Base monomials are all products of distinct odd coordinates
/// times even-coordinate monomials of total degree <= max_even_degree.
class FieldAnsatz {
 public:
  FieldAnsatz(const Chart& chart, int max_even_degree);

  const Chart& chart() const { return chart_; }
  std::size_t size() const { return fields_.size(); }
  std::size_t monomial_count() const { return monomials_.size(); }
  /// Homogeneous basis field number k (a monomial times a frame field).
  const VectorField& field(std::size_t k) const { return fields_[k]; }

  /// sum_k c_k field_k split into its even and odd parts.
  std::pair<VectorField, VectorField> assemble(const SparseRow& coeffs) const;

 private:
  Chart chart_;
  std::vector<SuperPoly> monomials_;
  std::vector<VectorField> fields_;
};

/// Homogeneous linear conditions sum_k c_k image_k = 0 on lists of superfunctions,
/// compared coefficient by coefficient.
class ImageSystem {
 public:
  explicit ImageSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  void add_image(std::size_t unknown, std::span<const SuperPoly> image);
  std::size_t equations() const { return rows_.size(); }
  LinearSolution solve() const;

 private:
  std::size_t unknowns_;
  std::map<std::pair<std::size_t, Monomial>, SparseRow> rows_;
};

}  // namespace polycontact
