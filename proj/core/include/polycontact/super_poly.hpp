#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "polycontact/gaussian_rational.hpp"
#include "polycontact/generator.hpp"
#include "polycontact/monomial.hpp"

namespace polycontact {

/// Element of the supercommutative algebra over Q(i) generated by a GeneratorContext,
/// extended by exponential atoms e^{c g} on even generators and Laurent powers of
/// invertible generators. Always kept in canonical form: no zero coefficients, every
/// monomial canonical.
class SuperPoly {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  explicit SuperPoly(ContextPtr ctx);
  SuperPoly(ContextPtr ctx, const GaussianRational& constant);

  static SuperPoly generator(const ContextPtr& ctx, GenIndex gen);
  static SuperPoly generator(const ContextPtr& ctx, std::string_view name);
  /// e^{multiplier * base}; base must be even.
  static SuperPoly exp(const ContextPtr& ctx, GenIndex base, const GaussianRational& multiplier = 1);
  static SuperPoly term(const ContextPtr& ctx, Monomial m, const GaussianRational& coeff);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Common parity of all terms; nullopt when inhomogeneous. Zero reports even.
  std::optional<Parity> parity() const;
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  GaussianRational constant_term() const;
  bool depends_on(GenIndex gen) const;
  /// Single term whose monomial is a unit (invertible generators and exp atoms only).
  bool is_unit_monomial() const;

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const GaussianRational& c);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator*(SuperPoly a, const GaussianRational& c) { return a *= c; }
  friend SuperPoly operator*(const GaussianRational& c, SuperPoly a) { return a *= c; }
  SuperPoly operator-() const;

  /// Negative n requires a unit monomial.
  SuperPoly pow(int n) const;
  SuperPoly inverse_unit() const;

  /// Image under setting every odd generator to zero.
  SuperPoly body() const;
  /// Left derivative: for odd generators the variable is first moved to the front.
  SuperPoly derivative(GenIndex gen) const;
  /// Same polynomial re-expressed over `target`, matching generators by name.
  SuperPoly transport(const ContextPtr& target) const;

  void add_term(const Monomial& m, const GaussianRational& coeff);

  friend bool operator==(const SuperPoly& a, const SuperPoly& b);

 private:
  void check_same(const SuperPoly& o) const;

  ContextPtr ctx_;
  TermMap terms_;
};

/// Simultaneous substitution homomorphism from polynomials over `source` to
/// polynomials over `target`. Generators without an explicit assignment map to the
/// same-named generator of the target context.
class Substitution {
 public:
  Substitution(ContextPtr source, ContextPtr target);
  explicit Substitution(const ContextPtr& ctx) : Substitution(ctx, ctx) {}

  /// Value must live over the target context and share the generator's parity.
  Substitution& assign(GenIndex gen, SuperPoly value);
  Substitution& assign(std::string_view name, SuperPoly value);

  SuperPoly apply(const SuperPoly& p) const;
  const ContextPtr& source() const { return source_; }
  const ContextPtr& target() const { return target_; }

 private:
  const SuperPoly& image(GenIndex gen) const;
  SuperPoly exp_image(GenIndex gen, const GaussianRational& multiplier) const;

  ContextPtr source_;
  ContextPtr target_;
  std::vector<std::optional<SuperPoly>> images_;
  std::vector<bool> assigned_;
};

SuperPoly substitute(const SuperPoly& p, const std::map<GenIndex, SuperPoly>& assignment);

}  // namespace polycontact
