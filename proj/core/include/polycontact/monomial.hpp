#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polycontact/gaussian_rational.hpp"
#include "polycontact/generator.hpp"

namespace polycontact {

/// Bit mask over odd ranks; bit k set means the k-th odd generator occurs.
using OddMask = std::uint64_t;

/// Sign of concatenating the odd word `first` followed by `second` and sorting it into
/// canonical order; 0 when the words share a generator (the product vanishes).
int reorder_sign(OddMask first, OddMask second);

/// Canonical monomial: commuting part (even powers and exponential atoms) times the
/// product of its odd generators in increasing canonical order.
class Monomial {
 public:
  using Power = std::pair<GenIndex, int>;
  using ExpAtom = std::pair<GenIndex, GaussianRational>;  // e^{multiplier * base}

  Monomial() = default;

  static Monomial power(GenIndex gen, int exponent);
  static Monomial exp_atom(GenIndex base, GaussianRational multiplier);
  static Monomial odd(unsigned rank) { Monomial m; m.odd_ = OddMask{1} << rank; return m; }
  static Monomial from_mask(OddMask mask) { Monomial m; m.odd_ = mask; return m; }

  const std::vector<Power>& powers() const { return powers_; }
  const std::vector<ExpAtom>& exps() const { return exps_; }
  OddMask odd_mask() const { return odd_; }
  unsigned odd_degree() const { return static_cast<unsigned>(std::popcount(odd_)); }
  Parity parity() const { return (odd_degree() & 1U) ? Parity::odd : Parity::even; }
  bool is_one() const { return powers_.empty() && exps_.empty() && odd_ == 0; }
  bool has_odd() const { return odd_ != 0; }

  int exponent(GenIndex gen) const;
  const GaussianRational* exp_multiplier(GenIndex gen) const;

  /// Product with the Koszul sign of bringing the odd parts into canonical order;
  /// nullopt when an odd generator would repeat.
  static std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b);

  // Editing helpers used by derivatives and splitting; they keep the canonical form.
  Monomial with_exponent(GenIndex gen, int exponent) const;
  Monomial without_exp(GenIndex gen) const;
  Monomial without_odd(unsigned rank) const;
  Monomial with_odd_mask(OddMask mask) const;
  Monomial with_commuting(std::vector<Power> powers, std::vector<ExpAtom> exps) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Power> powers_;
  std::vector<ExpAtom> exps_;
  OddMask odd_ = 0;
};

}  // namespace polycontact
