#pragma once

#include <string>
#include <vector>

#include "polycontact/chart.hpp"
#include "polycontact/generator.hpp"
#include "polycontact/super_poly.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

/// Finite-dimensional Lie superalgebra given by structure constants on a homogeneous
/// basis: [T_i, T_j] = sum_k c_{ij}^k T_k.
class LieSuperalgebra {
 public:
  LieSuperalgebra(std::vector<std::string> names, std::vector<Parity> parities,
                  std::vector<std::vector<std::vector<GaussianRational>>> constants);

  /// Structure constants read off a faithful realisation by vector fields with
  /// constant coefficients. Throws AlgebraError when a bracket leaves the span.
  static LieSuperalgebra from_realization(std::vector<std::string> names, const std::vector<VectorField>& fields);

  std::size_t dim() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<GaussianRational>& bracket(std::size_t i, std::size_t j) const { return constants_[i][j]; }

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::vector<std::vector<std::vector<GaussianRational>>> constants_;
};

/// sum_k f_k T_k with superfunction coefficients written on the left.
struct AlgebraValued {
  const LieSuperalgebra* algebra = nullptr;
  std::vector<SuperPoly> coeffs;

  bool is_zero() const;
  friend bool operator==(const AlgebraValued&, const AlgebraValued&);
};

AlgebraValued algebra_zero(const LieSuperalgebra& g, const ContextPtr& ctx);
AlgebraValued operator+(const AlgebraValued& a, const AlgebraValued& b);
AlgebraValued operator*(const GaussianRational& c, const AlgebraValued& a);
/// [f T_i, g T_j] = (-1)^{|T_i||g|} f g [T_i, T_j], extended bilinearly.
AlgebraValued bracket(const AlgebraValued& a, const AlgebraValued& b);
/// Coefficientwise exterior derivative (the T_k are constant).
AlgebraValued exterior_derivative(const Chart& chart, const AlgebraValued& a);

struct HadamardSeries {
  /// ad_A^n(dA) for n = 0, 1, ... up to and including the first vanishing term.
  std::vector<AlgebraValued> ad_powers;
  /// sum_n (-1)^n / (n+1)! ad_A^n(dA)
  AlgebraValued sum;
  bool terminated = false;
};

/// e^{-A} d e^{A} for even A; throws AlgebraError when ad_A^n(dA) is still nonzero at
/// n = depth_cap.
HadamardSeries left_maurer_cartan(const Chart& chart, const AlgebraValued& a, int depth_cap = 8);

}  // namespace polycontact
