#pragma once

#include <vector>

#include "polycontact/check_report.hpp"
#include "polycontact/chart.hpp"
#include "polycontact/monomial.hpp"
#include "polycontact/nondegeneracy.hpp"

namespace polycontact {

/// Reference normaliser: sorts a word of odd ranks by adjacent transpositions, one sign
/// flip per swap; returns 0 on a repeated generator.
int naive_word_sign(std::vector<unsigned> word);

/// Decides invertibility of a square matrix of even Grassmann elements by solving
/// M Y = 1 for Y in the same algebra, coefficient by coefficient.
bool invertible_by_linear_solve(const PolyMatrix& m, const Chart& chart);

/// Randomised laws of the algebra and the calculus (d^2 = 0, Leibniz, supercommutativity,
/// the two Lie derivative expressions, pullback laws, bracket laws, product oracle,
/// body-rank soundness).
CheckReport verify_calculus_laws(const CheckOptions& opts = {});

}  // namespace polycontact
