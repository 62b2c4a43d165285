#pragma once

#include "polycontact/chart.hpp"
#include "polycontact/super_poly.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

// Sign conventions: left derivatives throughout, d acts as dx^B (d/dx^B) with the
// differential on the left, and
//   i_X w   = (-1)^|X| X^B (d w / d dx^B)
//   L_X w   = (-1)^|X| dx^B (d X^C / d x^B)(d w / d dx^C) + X^B (d w / d x^B)
// on scalar pseudoforms. Vector-valued forms act componentwise; the Lie derivative
// adds -(-1)^{|X||Omega|} Omega^B (d X^A / d x^B) along each leg A.

SuperPoly exterior_derivative(const Chart& chart, const SuperPoly& form);
VectorValuedForm exterior_derivative(const VectorValuedForm& form);

SuperPoly interior_product(const VectorField& x, const SuperPoly& form);
VectorValuedForm interior_product(const VectorField& x, const VectorValuedForm& form);

/// Explicit coordinate formula.
SuperPoly lie_derivative(const VectorField& x, const SuperPoly& form);
VectorValuedForm lie_derivative(const VectorField& x, const VectorValuedForm& form);

/// Cartan-style formula d(i_X .) - (-1)^{|X|+1} i_X(d .) plus the same leg correction;
/// kept separately so the two expressions can be checked against each other.
SuperPoly lie_derivative_cartan(const VectorField& x, const SuperPoly& form);
VectorValuedForm lie_derivative_cartan(const VectorField& x, const VectorValuedForm& form);

/// [X, Y] = X o Y - (-1)^{|X||Y|} Y o X.
VectorField graded_commutator(const VectorField& x, const VectorField& y);

}  // namespace polycontact
