#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polycontact/chart.hpp"
#include "polycontact/super_map.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

/// Seeded generator of small random objects for the property suites.
class RandomObjects {
 public:
  RandomObjects(Chart chart, std::uint64_t seed);

  const Chart& chart() const { return chart_; }
  std::mt19937_64& engine() { return rng_; }

  int uniform(int lo, int hi);
  /// Small nonzero Gaussian rational.
  GaussianRational coefficient();
  /// Homogeneous polynomial in base coordinates (and fibre coordinates when requested).
  SuperPoly poly(Parity parity, int max_terms = 3, int max_even_degree = 2, bool with_fibers = false);
  VectorField field(Parity parity, int max_terms = 2, int max_even_degree = 2, bool with_fibers = false);
  VectorValuedForm form(Parity parity, int max_terms = 2, int max_even_degree = 2);
  Parity parity();
  /// Shear x^A -> x^A + f(other coordinates) with its exact inverse.
  SuperMap shear();
  /// Composite of a few shears.
  SuperMap invertible_map(int shears = 2);

 private:
  SuperPoly monomial(Parity parity, int max_even_degree, bool with_fibers, std::size_t skip_slot);

  Chart chart_;
  std::mt19937_64 rng_;
};

}  // namespace polycontact
