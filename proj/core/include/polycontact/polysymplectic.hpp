#pragma once

#include "polycontact/check_report.hpp"
#include "polycontact/chart.hpp"
#include "polycontact/super_map.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

/// R^{4|4} x R with the extra even coordinate l (exponential atoms e^{c l} allowed).
const Chart& symplectization_chart();
/// R^{4|4} x (0, inf) with invertible radial coordinate r and the formal dilation
/// parameter t (even, invertible).
const Chart& cone_chart();

/// pi^* alpha on an extended chart.
VectorValuedForm pulled_back_alpha(const Chart& extended);

/// omega = d(e^l pi^* alpha).
VectorValuedForm symplectic_form();
/// varpi = d(r^2 alpha).
VectorValuedForm cone_form();
/// Phi_t : r -> t r on cone_chart().
SuperMap dilation_map(const Chart& cone);

CheckReport verify_symplectization(const CheckOptions& opts = {});
CheckReport verify_cone(const CheckOptions& opts = {});
CheckReport verify_block_decomposition(const CheckOptions& opts = {});

}  // namespace polycontact
