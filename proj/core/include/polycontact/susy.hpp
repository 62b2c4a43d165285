#pragma once

#include <array>

#include "polycontact/chart.hpp"
#include "polycontact/sigma.hpp"
#include "polycontact/super_map.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

/// Slots of the superspace coordinates x^mu, theta^a, thetabar_adot on any chart that
/// declares them under the names x0..x3, th1, th2, thb1, thb2.
struct SusySlots {
  std::array<std::size_t, 4> x{};
  std::array<std::size_t, 2> th{};
  std::array<std::size_t, 2> thb{};

  /// Throws UnknownGenerator when a coordinate is missing.
  static SusySlots on(const Chart& chart);
};

/// R^{4|4} with the transformation parameters eps1, eps2, epsb1, epsb2 (odd),
/// a0..a3 (even) and the R-phase u (even, invertible). Built once and shared.
const Chart& susy_chart();

struct SusyGenerators {
  std::array<VectorField, 2> Q;
  std::array<VectorField, 2> Qbar;
  std::array<VectorField, 2> D;
  std::array<VectorField, 2> Dbar;
  std::array<VectorField, 4> P;
  VectorField R;
};

/// Works on every chart containing the superspace coordinates (extra legs get zero).
SusyGenerators build_generators(const Chart& chart);

/// alpha = (dx^mu + i(theta sigma^mu dthetabar + dtheta sigma^mu thetabar)) d/dx^mu.
VectorValuedForm polycontact_form(const Chart& chart);

/// sum_{a,bdot} left^a sigma^mu_{a bdot} right_bdot.
SuperPoly sigma_contract(std::size_t mu, const std::array<SuperPoly, 2>& left, const std::array<SuperPoly, 2>& right);

// Maps on susy_chart(); each carries its closed-form inverse.
SuperMap susy_map(const Chart& chart);
SuperMap translation_map(const Chart& chart);
SuperMap r_phase_map(const Chart& chart);

/// x'^mu = lambda[mu][nu] x^nu, theta'^a = theta^b spinor[b][a],
/// thetabar'_bdot = dagger(spinor)[bdot][cdot] thetabar_cdot.
struct LorentzPair {
  Matrix lambda;
  Matrix spinor;
};

/// spinor sigma^mu spinor^dagger - lambda[mu][nu] sigma^nu for each mu.
std::array<Matrix, 4> intertwining_residual(const LorentzPair& pair);
/// Throws PreconditionError with the residual when the pair does not intertwine.
SuperMap lorentz_map(const Chart& chart, const LorentzPair& pair);
/// Boost along x^3 with rapidity cosh = 17/8, sinh = 15/8 and spinor diag(2, 1/2).
LorentzPair rational_z_boost();

}  // namespace polycontact
