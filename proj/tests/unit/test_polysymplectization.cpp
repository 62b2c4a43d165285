#include <doctest.h>

#include "polycontact/calculus.hpp"
#include "polycontact/nondegeneracy.hpp"
#include "polycontact/polysymplectic.hpp"
#include "polycontact/susy.hpp"

using namespace polycontact;

namespace {

const GaussianRational kI = GaussianRational::i();

std::vector<VectorField> frame(const Chart& c) {
  std::vector<VectorField> out;
  for (std::size_t s = 0; s < c.dim(); ++s) out.push_back(VectorField::coordinate(c, s));
  return out;
}

}  // namespace

TEST_CASE("extended charts") {
  const Chart& m = symplectization_chart();
  CHECK(m.dim() == 9);
  CHECK(m.slot_parity(m.slot("l")) == Parity::even);
  CHECK(m.var("dl").parity() == Parity::odd);
  const Chart& k = cone_chart();
  CHECK(k.var("r") * k.var("r").pow(-1) == k.constant(1));
  CHECK(k.var("t") * k.var("t").pow(-1) == k.constant(1));
}

TEST_CASE("omega is even, closed and matches the coordinate display") {
  const Chart& m = symplectization_chart();
  const SusySlots s = SusySlots::on(m);
  VectorValuedForm omega = symplectic_form();
  CHECK(omega.parity() == Parity::even);
  CHECK(exterior_derivative(omega).is_zero());

  const SuperPoly el = SuperPoly::exp(m.context(), m.base_generator(m.slot("l")));
  const SuperPoly dl = m.var("dl");
  const std::array<SuperPoly, 2> th{m.coordinate(s.th[0]), m.coordinate(s.th[1])};
  const std::array<SuperPoly, 2> thb{m.coordinate(s.thb[0]), m.coordinate(s.thb[1])};
  const std::array<SuperPoly, 2> dth{m.differential(s.th[0]), m.differential(s.th[1])};
  const std::array<SuperPoly, 2> dthb{m.differential(s.thb[0]), m.differential(s.thb[1])};
  for (std::size_t mu = 0; mu < 4; ++mu) {
    SuperPoly expected = el * (dl * m.differential(s.x[mu]) +
                               kI * dl * (sigma_contract(mu, th, dthb) + sigma_contract(mu, dth, thb)) +
                               (2 * kI) * sigma_contract(mu, dth, dthb));
    CHECK(omega[s.x[mu]] == expected);
  }
  CHECK(omega[m.slot("l")].is_zero());

  VectorValuedForm alpha = pulled_back_alpha(m);
  CHECK(omega == el * (dl * alpha + exterior_derivative(alpha)));
}

TEST_CASE("omega is non-degenerate and e^l alpha alone is not closed") {
  const Chart& m = symplectization_chart();
  auto basis = frame(m);
  NondegeneracyResult nd = nondegeneracy_check(symplectic_form(), basis);
  CHECK(nd.nondegenerate);
  CHECK(nd.rank == basis.size());
  // alpha itself is degenerate on the full frame (odd directions contract to zero bodies)
  CHECK_FALSE(nondegeneracy_check(pulled_back_alpha(m), basis).nondegenerate);
  const SuperPoly el = SuperPoly::exp(m.context(), m.base_generator(m.slot("l")));
  CHECK_FALSE(exterior_derivative(el * pulled_back_alpha(m)).is_zero());
}

TEST_CASE("cone form scales quadratically under dilation") {
  const Chart& c = cone_chart();
  VectorValuedForm varpi = cone_form();
  CHECK(exterior_derivative(varpi).is_zero());
  SuperMap phi = dilation_map(c);
  CHECK(phi.inverse_is_exact());
  VectorValuedForm scaled = transform_vector_valued(phi, varpi);
  CHECK(scaled == c.var("t").pow(2) * varpi);
  CHECK_FALSE(scaled == varpi);
  CHECK(nondegeneracy_check(varpi, frame(c)).nondegenerate);
}

TEST_CASE("named checks of the extended constructions pass") {
  CHECK(verify_symplectization().status == CheckStatus::pass);
  CHECK(verify_cone().status == CheckStatus::pass);
  CheckReport blocks = verify_block_decomposition();
  CHECK(blocks.status == CheckStatus::pass);
  CHECK(blocks.assertions.size() >= 10);
}
