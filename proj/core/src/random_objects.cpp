#include "polycontact/random_objects.hpp"

#include <algorithm>

#include "polycontact/errors.hpp"

namespace polycontact {

namespace {
constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);
}

RandomObjects::RandomObjects(Chart chart, std::uint64_t seed) : chart_(std::move(chart)), rng_(seed) {}

int RandomObjects::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

GaussianRational RandomObjects::coefficient() {
  for (;;) {
    GaussianRational re(uniform(-3, 3), uniform(1, 2));
    GaussianRational im = uniform(0, 2) == 0 ? GaussianRational(uniform(-2, 2)) : GaussianRational(0);
    GaussianRational c = re + im * GaussianRational::i();
    if (!c.is_zero()) return c;
  }
}

Parity RandomObjects::parity() { return uniform(0, 1) ? Parity::odd : Parity::even; }

SuperPoly RandomObjects::monomial(Parity parity, int max_even_degree, bool with_fibers, std::size_t skip_slot) {
  std::vector<GenIndex> odd;
  std::vector<GenIndex> even;
  for (std::size_t s = 0; s < chart_.dim(); ++s) {
    if (s == skip_slot) continue;
    (is_odd(chart_.slot_parity(s)) ? odd : even).push_back(chart_.base_generator(s));
    if (with_fibers) (is_odd(chart_.slot_parity(s)) ? even : odd).push_back(chart_.fiber_generator(s));
  }
  const ContextPtr& ctx = chart_.context();
  std::shuffle(odd.begin(), odd.end(), rng_);
  int k = odd.empty() ? 0 : uniform(0, std::min<int>(3, static_cast<int>(odd.size())));
  if ((k % 2 == 1) != is_odd(parity)) {
    if (k > 0 && (k == static_cast<int>(odd.size()) || uniform(0, 1))) {
      --k;
    } else if (k < static_cast<int>(odd.size())) {
      ++k;
    } else {
      throw AlgebraError("RandomObjects: cannot reach the requested parity");
    }
  }
  SuperPoly out(ctx, 1);
  for (int i = 0; i < k; ++i) out = out * SuperPoly::generator(ctx, odd[i]);
  if (!even.empty()) {
    int deg = uniform(0, max_even_degree);
    for (int i = 0; i < deg; ++i) {
      out = out * SuperPoly::generator(ctx, even[uniform(0, static_cast<int>(even.size()) - 1)]);
    }
  }
  return out;
}

SuperPoly RandomObjects::poly(Parity parity, int max_terms, int max_even_degree, bool with_fibers) {
  SuperPoly out = chart_.zero();
  int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) out += coefficient() * monomial(parity, max_even_degree, with_fibers, kNoSkip);
  return out;
}

VectorField RandomObjects::field(Parity parity, int max_terms, int max_even_degree, bool with_fibers) {
  std::vector<SuperPoly> comps;
  for (std::size_t s = 0; s < chart_.dim(); ++s) {
    comps.push_back(uniform(0, 2) == 0 ? chart_.zero()
                                       : poly(parity + chart_.slot_parity(s), max_terms, max_even_degree, with_fibers));
  }
  return {chart_, std::move(comps), parity};
}

VectorValuedForm RandomObjects::form(Parity parity, int max_terms, int max_even_degree) {
  std::vector<SuperPoly> comps;
  for (std::size_t s = 0; s < chart_.dim(); ++s) {
    comps.push_back(uniform(0, 2) == 0 ? chart_.zero()
                                       : poly(parity + chart_.slot_parity(s), max_terms, max_even_degree, true));
  }
  return {chart_, std::move(comps), parity};
}

SuperMap RandomObjects::shear() {
  const std::size_t slot = static_cast<std::size_t>(uniform(0, static_cast<int>(chart_.dim()) - 1));
  SuperPoly f = chart_.zero();
  int n = uniform(1, 2);
  for (int i = 0; i < n; ++i) f += coefficient() * monomial(chart_.slot_parity(slot), 2, false, slot);
  std::vector<SuperPoly> fwd;
  for (std::size_t s = 0; s < chart_.dim(); ++s) fwd.push_back(chart_.coordinate(s));
  std::vector<SuperPoly> inv = fwd;
  fwd[slot] += f;
  inv[slot] -= f;
  return {chart_, chart_, std::move(fwd), std::move(inv)};
}

SuperMap RandomObjects::invertible_map(int shears) {
  SuperMap out = shear();
  for (int i = 1; i < shears; ++i) out = shear().after(out);
  return out;
}

}  // namespace polycontact
