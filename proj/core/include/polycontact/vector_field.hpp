#pragma once

#include <vector>

#include "polycontact/chart.hpp"
#include "polycontact/errors.hpp"
#include "polycontact/super_poly.hpp"

namespace polycontact {

namespace detail {

/// Components Y^A along the coordinate legs d/dx^A of a chart, with a declared total
/// parity: every nonzero component has parity(total) + parity(x^A).
template <typename Derived>
class LegArray {
 public:
  const Chart& chart() const { return chart_; }
  std::size_t dim() const { return comps_.size(); }
  Parity parity() const { return parity_; }
  const SuperPoly& operator[](std::size_t slot) const { return comps_[slot]; }
  const std::vector<SuperPoly>& components() const { return comps_; }

  bool is_zero() const {
    for (const auto& c : comps_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  Derived& operator+=(const Derived& o) {
    combine(o, false);
    return self();
  }
  Derived& operator-=(const Derived& o) {
    combine(o, true);
    return self();
  }
  Derived& operator*=(const GaussianRational& c) {
    for (auto& comp : comps_) comp *= c;
    return self();
  }
  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator*(const GaussianRational& c, Derived a) { return a *= c; }
  Derived operator-() const {
    Derived out = self();
    out *= GaussianRational(-1);
    return out;
  }

  /// Left multiplication by a homogeneous function: (f Y)^A = f Y^A.
  friend Derived operator*(const SuperPoly& f, const Derived& y) {
    auto p = f.parity();
    if (!p) throw ParityError("left multiplication by an inhomogeneous function");
    std::vector<SuperPoly> comps;
    comps.reserve(y.dim());
    for (const auto& c : y.comps_) comps.push_back(f * c);
    return Derived(y.chart_, std::move(comps), *p + y.parity_);
  }

  friend bool operator==(const LegArray& a, const LegArray& b) {
    return a.chart_ == b.chart_ && a.parity_ == b.parity_ && a.comps_ == b.comps_;
  }

 protected:
  LegArray(Chart chart, Parity parity) : chart_(std::move(chart)), parity_(parity) {
    comps_.assign(chart_.dim(), chart_.zero());
  }
  LegArray(Chart chart, std::vector<SuperPoly> comps, Parity parity)
      : chart_(std::move(chart)), comps_(std::move(comps)), parity_(parity) {
    if (comps_.size() != chart_.dim()) throw AlgebraError("component count does not match the chart dimension");
    for (std::size_t s = 0; s < comps_.size(); ++s) {
      if (comps_[s].context() != chart_.context()) throw ContextMismatch("component over a foreign context");
      if (comps_[s].is_zero()) continue;
      auto p = comps_[s].parity();
      if (!p || *p != parity_ + chart_.slot_parity(s)) {
        throw ParityError("component along '" + chart_.slot_name(s) + "' has the wrong parity for a " +
                          to_string(parity_) + " object");
      }
    }
  }

 private:
  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }

  void combine(const Derived& o, bool subtract) {
    require_same_chart(chart_, o.chart_, "addition");
    if (o.is_zero()) return;
    if (is_zero()) {
      parity_ = o.parity_;
    } else if (parity_ != o.parity_) {
      throw ParityError("adding objects of different parity");
    }
    for (std::size_t s = 0; s < comps_.size(); ++s) {
      if (subtract) {
        comps_[s] -= o.comps_[s];
      } else {
        comps_[s] += o.comps_[s];
      }
    }
  }

  Chart chart_;
  std::vector<SuperPoly> comps_;
  Parity parity_;
};

}  // namespace detail

/// Derivation X = X^A d/dx^A. Components may involve fibre coordinates; the derivation
/// only differentiates base coordinates.
class VectorField : public detail::LegArray<VectorField> {
 public:
  VectorField(Chart chart, Parity parity) : LegArray(std::move(chart), parity) {}
  VectorField(Chart chart, std::vector<SuperPoly> comps, Parity parity)
      : LegArray(std::move(chart), std::move(comps), parity) {}

  /// The coordinate frame field d/dx^A.
  static VectorField coordinate(const Chart& chart, std::size_t slot);

  /// X(f) = sum_A X^A (d f / d x^A), left derivatives.
  SuperPoly apply(const SuperPoly& f) const;
};

/// Tangent-valued pseudoform Omega = Omega^A(x, dx) d/dx^A.
class VectorValuedForm : public detail::LegArray<VectorValuedForm> {
 public:
  VectorValuedForm(Chart chart, Parity parity) : LegArray(std::move(chart), parity) {}
  VectorValuedForm(Chart chart, std::vector<SuperPoly> comps, Parity parity)
      : LegArray(std::move(chart), std::move(comps), parity) {}
};

/// Re-expresses an object on a chart whose coordinates include those of the source
/// (matched by name). Legs missing from the target must carry zero components.
VectorField transport(const VectorField& x, const Chart& target);
VectorValuedForm transport(const VectorValuedForm& form, const Chart& target);

}  // namespace polycontact
