#pragma once

#include <vector>

#include "polycontact/chart.hpp"
#include "polycontact/super_poly.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

/// Parity-preserving coordinate change phi: source -> target with an explicit inverse.
/// `forward[A]` expresses the target coordinate x'^A over the source chart,
/// `inverse[B]` expresses the source coordinate x^B over the target chart.
/// Parameters pass through unchanged (matched by name).
class SuperMap {
 public:
  SuperMap(Chart source, Chart target, std::vector<SuperPoly> forward, std::vector<SuperPoly> inverse);

  static SuperMap identity(const Chart& chart);

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  const std::vector<SuperPoly>& forward() const { return forward_; }
  const std::vector<SuperPoly>& inverse() const { return inverse_; }

  SuperMap inverted() const;
  /// this o first: applies `first` and then this map.
  SuperMap after(const SuperMap& first) const;

  /// Substitution of base coordinates only (fibres untouched); the building block of
  /// the inverse checks and of composition.
  SuperPoly substitute_base(const SuperPoly& f_on_target) const;

  /// forward o inverse and inverse o forward both reduce to the identity on coordinates.
  bool inverse_is_exact() const;

 private:
  Chart source_;
  Chart target_;
  std::vector<SuperPoly> forward_;
  std::vector<SuperPoly> inverse_;
};

/// phi^* of a scalar pseudoform on the target: base coordinates by the forward map,
/// fibres by dx'^A = d(forward^A).
SuperPoly pullback(const SuperMap& phi, const SuperPoly& form_on_target);

/// Expresses the target-chart object Omega^A(x', dx') d/dx'^A in source coordinates:
/// components pulled back and legs rewritten with d/dx'^A = (dx^B/dx'^A) d/dx^B.
VectorValuedForm transform_vector_valued(const SuperMap& phi, const VectorValuedForm& form_on_target);

}  // namespace polycontact
