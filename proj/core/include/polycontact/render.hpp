#pragma once

#include <string>

#include "polycontact/gaussian_rational.hpp"
#include "polycontact/super_poly.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

// Plain output is valid input for the expression parser: explicit '*', generator
// names as declared, I for the imaginary unit, exp(c*l) for exponential atoms and
// @name for the frame field d/d(name). Terms come out in canonical monomial order.

std::string render_plain(const GaussianRational& c);
std::string render_plain(const SuperPoly& p);
std::string render_plain(const VectorField& x);
std::string render_plain(const VectorValuedForm& form);

std::string render_latex(const GaussianRational& c);
std::string render_latex(const SuperPoly& p);
std::string render_latex(const VectorField& x);
std::string render_latex(const VectorValuedForm& form);

/// LaTeX spelling of a generator name (th1 -> \theta^{1}, dthb2 -> d\bar{\theta}_{\dot{2}}, l -> \lambda).
std::string latex_symbol(const std::string& name);

}  // namespace polycontact
