#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "polycontact/check_report.hpp"
#include "polycontact/lie_superalgebra.hpp"
#include "polycontact/susy.hpp"

namespace polycontact {

CheckReport verify_kernel_theorem(const CheckOptions& opts = {});
CheckReport verify_nondegeneracy(const CheckOptions& opts = {});

enum class InvarianceKind { susy, translation, lorentz, r_phase };
/// lorentz uses rational_z_boost() unless a pair is supplied.
CheckReport verify_invariance(InvarianceKind kind, const std::optional<LorentzPair>& pair = std::nullopt);

CheckReport verify_strict_contact_fields(const CheckOptions& opts = {});

struct ReebResult {
  /// Solved P_mu, one per mu (empty slots when the solve failed).
  std::vector<VectorField> fields;
  /// Solution-space dimension of each system.
  std::array<std::size_t, 4> dimensions{};
  CheckReport report;
};
ReebResult reeb_solve(const CheckOptions& opts = {});

CheckReport verify_algebra_table(const CheckOptions& opts = {});

struct Decomposition {
  VectorField distribution_part;  // X^a D_a + Xbar_a Dbar^a
  VectorField reeb_part;          // multiple of the P_mu
};
/// Homogeneous X on a chart carrying the superspace coordinates.
Decomposition decompose(const VectorField& x);
CheckReport verify_decomposition(const CheckOptions& opts = {});

struct MaurerCartanResult {
  LieSuperalgebra algebra;
  HadamardSeries series;
  /// Components of Omega along P_mu, as a vector-valued form on the translation legs.
  VectorValuedForm translation_part;
  /// i Omega with the generators realised by the supercharges Q, Qbar and d/dx.
  VectorField i_omega;
};
MaurerCartanResult susy_maurer_cartan(const Chart& chart);
CheckReport verify_maurer_cartan(const CheckOptions& opts = {});

}  // namespace polycontact
